#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tolkit/border.hpp"
#include "tolkit/model.hpp"
#include "tolkit/transforms.hpp"

namespace tolkit {

enum class ComponentTag { A1, A2, B1, B2 };

struct TaggedComponent {
  VSet vertices;
  ComponentTag tag;
};

struct GeneralEliminationState {
  VertexId u = -1, u_star = -1, w = -1, x1 = -1, x2 = -1;
  bool reversed = false;      // R was replaced by reverse(R) so that x1 lies left of P_u
  bool flipped = false;       // R_T was mirrored so that V0(u) lies left of T_u
  int depth = 0;              // nesting level of the single-unbounded recursion
  VSet Nu, V0, Qu;
  VSet D1, D2, S2;
  VSet Xtilde1, X1;
  std::vector<TaggedComponent> components;
  VSet Cu, C2, H, Htilde;
  VSet N;
  std::vector<VSet> H_layers;       // H_1, H_2, ...
  std::vector<VSet> Hprime_layers;  // H'_0, H'_1, ...
  std::vector<std::vector<VertexId>> chains;   // one recorded chain per vertex of the H layers
  std::vector<std::vector<VertexId>> chains_prime;
  std::vector<std::string> chain_findings;     // alternation facts that failed on the recorded chains
  VSet G0, G0prime;
  Segment ell{0, 0};
  Coord delta, eps;
  // R (working frame), R_ell, R_ell', R_ell'', R_ell'''.
  std::vector<ProjectionRep> stage_reps;
  BorderEliminationState border;
};

// One record per build_g0 call, for the module audit.
struct ModuleAudit {
  int n = 0;
  VertexId u = -1;
  VSet G0;
  bool module_ok = false;
  bool neighborhood_ok = false;
};

// Receives every build_g0 audit while installed; pass nullptr to remove.
void set_module_audit_sink(std::function<void(const ModuleAudit&)> sink);

// D1: V0 left of P_u; D2: V0 right of P_u; S2: V0 not left of P_u.
void classify_v0(const ProjectionRep& rep, const VSet& V0, VertexId u, VSet& D1, VSet& D2, VSet& S2);

// Expects rt already oriented with V0(u) left of T_u. May replace rep by reverse(rep).
void select_anchors(ProjectionRep& rep, const TrapezoidRep& rt, const Graph& g, GeneralEliminationState& st);

VSet grow_x1(const Graph& g, VertexId x1, VertexId w);

void build_partition(const ProjectionRep& rep, const TrapezoidRep& rt, const Graph& g, GeneralEliminationState& st);

void layer_h(const ProjectionRep& rep, const TrapezoidRep& rt, const Graph& g, GeneralEliminationState& st);

void build_g0(const ProjectionRep& rep, const Graph& g, GeneralEliminationState& st);

Segment make_line_segment(const ProjectionRep& rep, GeneralEliminationState& st);

// sub is a representation of G0 (local ids follow the sorted G0 set) with u unbounded.
ProjectionRep assemble_r_ell(const ProjectionRep& rep, const Graph& g, GeneralEliminationState& st,
                             const ProjectionRep& sub);

// R_ell plus sentinel through the three border stages; returns R_ell''' without the sentinel.
ProjectionRep transformations456(const ProjectionRep& r_ell, const Graph& g, GeneralEliminationState& st);

// Single unbounded vertex u with V = N[u] + V0(u): a representation of the same graph where u is still
// the only unbounded vertex and has the right border property.
ProjectionRep right_border_rep(const ProjectionRep& rep, const TrapezoidRep& rt, VertexId u, int depth = 0);

std::pair<ProjectionRep, GeneralEliminationState> eliminate_general(const ProjectionRep& rep,
                                                                    const TrapezoidRep& rt, VertexId u);

}  // namespace tolkit
