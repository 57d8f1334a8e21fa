#pragma once

#include <optional>
#include <string>

#include "tolkit/instances.hpp"
#include "tolkit/model.hpp"

namespace tolkit {

struct InstanceFile {
  int format_version = 1;
  std::optional<ProjectionRep> projection;
  std::optional<TrapezoidRep> trapezoid;
  std::optional<ToleranceRep> tolerance;
  std::optional<Graph> expected_graph;

  bool operator==(const InstanceFile& o) const {
    return format_version == o.format_version && projection == o.projection && trapezoid == o.trapezoid &&
           tolerance == o.tolerance && expected_graph == o.expected_graph;
  }
};

// Throws ParseError on malformed text or when no representation is present.
InstanceFile parse_instance(const std::string& text);
std::string print_instance(const InstanceFile& f);

InstanceFile read_instance(const std::string& path);
void write_instance(const std::string& path, const InstanceFile& f);

std::string print_graph(const Graph& g);
Graph parse_graph(const std::string& text);

// L1 at y=0, L2 at y=100, x scaled into [0,1000]; unbounded vertices drawn as bold lines.
std::string render_svg(const ProjectionRep& rep, const std::string& title = "");
std::string render_svg(const TrapezoidRep& rep, const std::string& title = "");

}  // namespace tolkit
