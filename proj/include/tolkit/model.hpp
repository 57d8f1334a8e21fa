#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tolkit {

using Coord = mpq_class;
using VertexId = int;
using VSet = std::set<VertexId>;

std::string to_string(const Coord& c);

// num/den in lowest terms; mpq_class(num, den) alone leaves the fraction unreduced.
Coord ratio(long num, long den);
Coord parse_coord(const std::string& s);

enum class ErrorKind {
  InvalidRep,
  PerturbFailed,
  UnknownVertex,
  NotUnbounded,
  GraphMismatch,
  RepsDisagree,
  V0Empty,
  EpsNonPositive,
  PreconditionFailed,
  NoUnbounded,
  GraphChanged,
  NoWitness,
  TieUnresolvable,
  EmptyFrontier,
  AssertionFailed,
  ChainNotFound,
  ModuleCheckFailed,
  NoEligibleUStar,
  RecursionNotShrinking,
  GeometryViolated,
  BandCollision,
  SubgraphMismatch,
  BandViolation,
  ConversionFailed,
  ParseError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

enum class Kind { Bounded, Unbounded };

// Upper interval [L,R] on L1, lower interval [l,r] on L2.
struct Pgram {
  Coord L, R, l, r;
  Kind kind = Kind::Bounded;

  bool bounded() const { return kind == Kind::Bounded; }
  bool unbounded() const { return kind == Kind::Unbounded; }
  bool operator==(const Pgram& o) const {
    return L == o.L && R == o.R && l == o.l && r == o.r && kind == o.kind;
  }

  static Pgram box(Coord L, Coord R, Coord l, Coord r) {
    return Pgram{std::move(L), std::move(R), std::move(l), std::move(r), Kind::Bounded};
  }
  static Pgram line(const Coord& top, const Coord& bottom, Kind k = Kind::Unbounded) {
    return Pgram{top, top, bottom, bottom, k};
  }
};

struct ProjectionRep {
  std::vector<Pgram> v;

  int size() const { return static_cast<int>(v.size()); }
  Pgram& operator[](VertexId i) { return v.at(i); }
  const Pgram& operator[](VertexId i) const { return v.at(i); }
  bool operator==(const ProjectionRep& o) const { return v == o.v; }
  VSet unbounded() const;
  VSet bounded() const;
};

struct Trapezoid {
  Coord A, B, a, b;
  bool operator==(const Trapezoid& o) const {
    return A == o.A && B == o.B && a == o.a && b == o.b;
  }
};

struct TrapezoidRep {
  std::vector<Trapezoid> v;

  int size() const { return static_cast<int>(v.size()); }
  Trapezoid& operator[](VertexId i) { return v.at(i); }
  const Trapezoid& operator[](VertexId i) const { return v.at(i); }
  bool operator==(const TrapezoidRep& o) const { return v == o.v; }
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

  int size() const { return n_; }
  bool has_edge(VertexId a, VertexId b) const { return adj_[idx(a, b)] != 0; }
  void add_edge(VertexId a, VertexId b);
  void remove_edge(VertexId a, VertexId b);
  VSet neighbors(VertexId a) const;
  VSet neighbors(const VSet& s) const;
  VSet closed_neighbors(const VSet& s) const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  int edge_count() const;
  // Connected components of G[verts].
  std::vector<VSet> components(const VSet& verts) const;
  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  size_t idx(VertexId a, VertexId b) const { return static_cast<size_t>(a) * n_ + b; }
  int n_ = 0;
  std::vector<char> adj_;
};

// Human-readable list of edges present in exactly one graph.
std::string graph_diff(const Graph& a, const Graph& b);

Coord slope_key(const Pgram& p);
bool precedes(const Pgram& p, const Pgram& q);
bool intersects(const Pgram& p, const Pgram& q);
bool adjacent(const Pgram& p, const Pgram& q);

bool precedes(const Trapezoid& p, const Trapezoid& q);
bool intersects(const Trapezoid& p, const Trapezoid& q);

enum class ViolationKind { BadOrder, NotParallelogram, UnboundedNotLine, DuplicateEndpoint, DuplicateSlope };

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> vertices;
  std::string message;
};

const char* violation_name(ViolationKind k);

std::vector<Violation> validate(const ProjectionRep& rep);
std::vector<Violation> validate_shape(const ProjectionRep& rep);
std::vector<Violation> validate(const TrapezoidRep& rep);

// Throws InvalidRep when validate() reports anything.
void require_valid(const ProjectionRep& rep, const std::string& where);

Graph induced_graph(const ProjectionRep& rep);
// Same adjacency rules, only the per-vertex shape invariants are enforced.
Graph induced_graph_loose(const ProjectionRep& rep);
Graph induced_graph_trapezoid(const TrapezoidRep& rep);

ProjectionRep perturb_distinct(const ProjectionRep& rep, std::uint64_t seed = 1);

// Sub-representation on `verts`; local id i corresponds to verts[i].
ProjectionRep restrict_rep(const ProjectionRep& rep, const std::vector<VertexId>& verts);
TrapezoidRep restrict_rep(const TrapezoidRep& rep, const std::vector<VertexId>& verts);
Graph restrict_graph(const Graph& g, const std::vector<VertexId>& verts);

// A parallelogram representation read as trapezoids.
TrapezoidRep as_trapezoids(const ProjectionRep& rep);

// All endpoints on L1 (upper) or L2 (lower), sorted ascending, duplicates kept.
std::vector<Coord> endpoints_upper(const ProjectionRep& rep);
std::vector<Coord> endpoints_lower(const ProjectionRep& rep);

}  // namespace tolkit
