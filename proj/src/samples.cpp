#include "tolkit/samples.hpp"

namespace tolkit {

NamedInstance path_instance() {
  NamedInstance f;
  f.rep.v = {
      Pgram::box(0, 20, 1, 21),    // z
      Pgram::box(10, 40, 13, 43),  // u
      Pgram::box(30, 70, 35, 75),  // v
      Pgram::line(35, 39),         // w
  };
  f.names = {{"z", 0}, {"u", 1}, {"v", 2}, {"w", 3}};
  f.rt = as_trapezoids(f.rep);
  return f;
}

NamedInstance landmark_instance() {
  NamedInstance f;
  f.rep.v = {
      Pgram::line(20, 20),          // u
      Pgram::box(18, 35, 22, 39),   // w1
      Pgram::box(17, 29, 23, 35),   // w2
      Pgram::box(15, 30, 12, 27),   // u*
      Pgram::box(28, 32, 40, 44),   // x
      Pgram::box(33, 34, 46, 47),   // y
  };
  f.names = {{"u", 0}, {"w1", 1}, {"w2", 2}, {"u*", 3}, {"x", 4}, {"y", 5}};
  return f;
}

NamedInstance two_sided_instance() {
  NamedInstance f;
  f.rep.v = {
      Pgram::line(50, 50),           // u
      Pgram::box(60, 62, 40, 42),    // u*
      Pgram::box(40, 45, 55, 60),    // w
      Pgram::box(61, 70, 63, 72),    // x
      Pgram::box(46, 49, 53, 56),    // w'
      Pgram::box(20, 31, 30, 41),    // x'
  };
  f.names = {{"u", 0}, {"u*", 1}, {"w", 2}, {"x", 3}, {"w'", 4}, {"x'", 5}};
  // Interval model: u=[22,23], u*=[0,20], w=[8,24], x=[1,2], w'=[10,26], x'=[4,6], scaled and nudged on L2.
  f.rt = TrapezoidRep{{
      {220, 230, 221, 231},
      {0, 200, 2, 202},
      {80, 240, 83, 243},
      {10, 20, 14, 24},
      {100, 260, 105, 265},
      {40, 60, 46, 66},
  }};
  return f;
}

}  // namespace tolkit
