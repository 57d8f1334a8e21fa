#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tolkit/samples.hpp"
#include "tolkit/instances.hpp"
#include "tolkit/io.hpp"

using namespace tolkit;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::path(::testing::TempDir()) / (std::string("tolkit_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string write(const std::string& name, const InstanceFile& f) const { return write(name, print_instance(f)); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(TOLKIT_CLI) + " -q " + args + " > " + path("stdout.txt") + " 2> " +
                            path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string out() const {
    std::ifstream in(path("stdout.txt"));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

InstanceFile projection_file(const ProjectionRep& rep) {
  InstanceFile f;
  f.projection = rep;
  return f;
}

}  // namespace

TEST_F(Cli, Validate) {
  EXPECT_EQ(run("validate " + write("ok.json", projection_file(path_instance().rep))), 0);

  ProjectionRep dup;
  dup.v = {Pgram::box(0, 1, 5, 6), Pgram::box(2, 3, 6, 7)};
  EXPECT_EQ(run("validate " + write("dup.json", projection_file(dup))), 3);
  EXPECT_NE(out().find("DuplicateEndpoint"), std::string::npos);

  EXPECT_EQ(run("validate " + write("none.json", "{\"format_version\": 1}")), 2);
  EXPECT_EQ(run("validate " + path("missing.json")), 2);
}

TEST_F(Cli, InducePath) {
  const std::string file = write("p4.json", projection_file(path_instance().rep));
  EXPECT_EQ(run("induce " + file), 0);
  EXPECT_EQ(out(), "{\"edges\":[[0,1],[1,2],[2,3]],\"n\":4}\n");

  EXPECT_EQ(run("induce " + write("empty.json", "{\"projection\": []}")), 0);
  EXPECT_EQ(out(), "{\"edges\":[],\"n\":0}\n");
}

TEST_F(Cli, InduceCheck) {
  InstanceFile f = projection_file(path_instance().rep);
  f.expected_graph = induced_graph(*f.projection);
  EXPECT_EQ(run("induce --check " + write("good.json", f)), 0);
  f.expected_graph = Graph(4);
  EXPECT_EQ(run("induce --check " + write("bad.json", f)), 3);
}

TEST_F(Cli, InduceTolerance) {
  InstanceFile f;
  f.tolerance = ToleranceRep{{{0, 4, 1}, {3, 6, 2}}};
  EXPECT_EQ(run("induce --rep tolerance " + write("tol.json", f)), 0);
  EXPECT_EQ(out(), "{\"edges\":[[0,1]],\"n\":2}\n");
}

TEST_F(Cli, EliminateSingleUnbounded) {
  const auto inst = gen_condition1_instance(6, 2);
  ASSERT_TRUE(inst);
  InstanceFile f;
  f.projection = inst->first;
  f.trapezoid = inst->second;
  const std::string result = path("result.json");
  EXPECT_EQ(run("eliminate --mode all " + write("c1.json", f) + " -o " + result), 0);
  const InstanceFile r = read_instance(result);
  ASSERT_TRUE(r.projection);
  EXPECT_TRUE(r.projection->unbounded().empty());
  EXPECT_EQ(induced_graph(*r.projection), induced_graph(inst->first));
}

TEST_F(Cli, EliminatePrecondition) {
  // Neither border property holds for u here.
  const NamedInstance f = two_sided_instance();
  EXPECT_EQ(run("eliminate --mode border --vertex 0 " + write("two.json", projection_file(f.rep))), 5);
  // Bounded vertex.
  EXPECT_EQ(run("eliminate --mode border --vertex 2 " + path("two.json")), 5);
  // General mode without a trapezoid model.
  EXPECT_EQ(run("eliminate --mode general --vertex 0 " + path("two.json")), 5);
}

TEST_F(Cli, EliminateTraceWritesFourStages) {
  const std::string trace = path("trace");
  const std::string file = write("landmark.json", projection_file(landmark_instance().rep));
  EXPECT_EQ(run("eliminate --mode border --vertex 0 " + file + " --trace-dir " + trace + " -o " + path("out.json")), 0);
  int svgs = 0, jsons = 0;
  for (const auto& e : fs::directory_iterator(trace)) {
    svgs += e.path().extension() == ".svg";
    jsons += e.path().extension() == ".json";
  }
  EXPECT_EQ(svgs, 4);
  EXPECT_EQ(jsons, 4);
  EXPECT_TRUE(fs::exists(fs::path(trace) / "stage3.svg"));
}

TEST_F(Cli, CanonAndAnalyze) {
  ProjectionRep lonely;
  lonely.v = {Pgram::line(0, 0), Pgram::box(10, 11, 12, 13)};
  const std::string file = write("lonely.json", projection_file(lonely));
  EXPECT_EQ(run("canon " + file + " -o " + path("canon.json")), 0);
  EXPECT_TRUE(read_instance(path("canon.json")).projection->unbounded().empty());
  EXPECT_EQ(run("analyze " + file), 0);
  EXPECT_NE(out().find("inevitable"), std::string::npos);
}

TEST_F(Cli, GenerateIsDeterministic) {
  EXPECT_EQ(run("--seed 9 generate --kind projection -n 6 -k 2 -o " + path("a.json")), 0);
  EXPECT_EQ(run("--seed 9 generate --kind projection -n 6 -k 2 -o " + path("b.json")), 0);
  EXPECT_EQ(read_instance(path("a.json")), read_instance(path("b.json")));
  EXPECT_EQ(run("induce --check " + path("a.json")), 0);
}

TEST_F(Cli, Render) {
  const std::string file = write("p4.json", projection_file(path_instance().rep));
  EXPECT_EQ(run("render " + file), 0);
  EXPECT_EQ(out(), render_svg(path_instance().rep, "p4"));
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("induce"), 2);
  EXPECT_EQ(run("induce --rep nonsense " + write("x.json", projection_file(path_instance().rep))), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, EmptySuite) { EXPECT_EQ(run("suite --seeds 0"), 0); }
