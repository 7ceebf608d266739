#pragma once

// Towers of point blow-ups of C^2, kept as an atlas of affine charts.
//
// Blowing up an exact point c of a chart with local coordinates (z1, z2)
// produces two new charts, each again with local coordinates named (z1, z2):
//
//   primary chart   : (z1, z2) |-> (c1 + z1,    c2 + z1*z2)   exceptional {z1=0}
//   secondary chart : (z1, z2) |-> (c1 + z1*z2, c2 + z2)      exceptional {z2=0}
//
// The atlas records, for every chart, the polynomial blow-down to its base
// chart; composing these gives the total blow-down to the root plane.
// Exceptional curves are tracked across later blow-ups by pulling their local
// equations back and stripping the power of the new exceptional coordinate
// they acquire (total- vs proper-transform bookkeeping).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crgeo/poly.hpp"

namespace crgeo {

struct ExactPoint2 {
  ExactComplex x, y;
  friend bool operator==(const ExactPoint2& a, const ExactPoint2& b) {
    return a.x == b.x && a.y == b.y;
  }
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

struct ChartMap {
  std::string chart_id;
  std::string base_id;  // empty for the root chart
  VarList vars;
  std::array<HoloPoly, 2> blow_down;        // local coordinates -> base coordinates
  std::optional<size_t> exceptional_index;  // local coordinate cutting the new curve
};

struct CurveLocalEq {
  HoloPoly eq;              // reduced local equation; constant <=> curve misses the chart
  unsigned stripped_power;  // pullback-from-base = (exceptional coord)^stripped * eq
};

struct ExceptionalCurve {
  std::string curve_id;
  std::string origin_chart;  // chart whose point was blown up
  ExactPoint2 center;
  std::map<std::string, CurveLocalEq> local_eqs;

  bool meets_chart(const std::string& chart_id) const {
    auto it = local_eqs.find(chart_id);
    return it != local_eqs.end() && !it->second.eq.is_constant();
  }
};

class BlowupTower {
 public:
  static BlowupTower plane(std::string root_id = "U0", VarList vars = {"z1", "z2"});

  // Blow up an exact point of an existing chart; returns the ids of the two
  // new charts (primary, secondary).
  std::pair<std::string, std::string> blow_up(const std::string& chart_id,
                                              const ExactPoint2& center);

  bool has_chart(const std::string& id) const { return atlas_.count(id) > 0; }
  const ChartMap& chart(const std::string& id) const;
  const std::vector<std::string>& chart_ids() const { return order_; }  // creation order
  const std::string& root_id() const { return root_id_; }
  const std::vector<ExceptionalCurve>& curves() const { return curves_; }
  const ExceptionalCurve& curve(const std::string& id) const;
  size_t steps() const { return step_; }

  // Composition of blow-downs from the chart all the way to the root plane.
  std::array<HoloPoly, 2> total_blow_down(const std::string& chart_id) const;

  // Pullback of a polynomial on the root plane to chart-local coordinates.
  HoloPoly pullback(const std::string& chart_id, const HoloPoly& p) const;
  HermPoly pullback(const std::string& chart_id, const HermPoly& p) const;

  // Indices of the local coordinates of `chart_id` that cut exceptional
  // curves (the curve equation is exactly that coordinate).
  std::vector<size_t> exceptional_coords(const std::string& chart_id) const;

  std::string describe() const;

 private:
  std::string root_id_;
  VarList vars_;
  std::map<std::string, ChartMap> atlas_;
  std::vector<std::string> order_;
  std::vector<ExceptionalCurve> curves_;
  size_t step_ = 0;
};

}  // namespace crgeo
