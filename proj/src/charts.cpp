#include "crgeo/charts.hpp"

#include <stdexcept>

namespace crgeo {

BlowupTower BlowupTower::plane(std::string root_id, VarList vars) {
  if (vars.size() != 2) throw std::invalid_argument("BlowupTower: need two variables");
  BlowupTower t;
  t.root_id_ = root_id;
  t.vars_ = vars;
  ChartMap root{root_id,
                "",
                vars,
                {HoloPoly::variable(vars, size_t(0)), HoloPoly::variable(vars, size_t(1))},
                std::nullopt};
  t.atlas_.emplace(root_id, std::move(root));
  t.order_.push_back(root_id);
  return t;
}

const ChartMap& BlowupTower::chart(const std::string& id) const {
  auto it = atlas_.find(id);
  if (it == atlas_.end()) throw std::invalid_argument("BlowupTower: unknown chart '" + id + "'");
  return it->second;
}

const ExceptionalCurve& BlowupTower::curve(const std::string& id) const {
  for (const auto& c : curves_)
    if (c.curve_id == id) return c;
  throw std::invalid_argument("BlowupTower: unknown curve '" + id + "'");
}

std::pair<std::string, std::string> BlowupTower::blow_up(const std::string& chart_id,
                                                         const ExactPoint2& center) {
  chart(chart_id);  // validates the id
  ++step_;
  std::string id_p = "U" + std::to_string(step_) + "p";
  std::string id_pp = "U" + std::to_string(step_) + "pp";
  std::string curve_id = "E" + std::to_string(step_);

  HoloPoly a = HoloPoly::variable(vars_, size_t(0));
  HoloPoly b = HoloPoly::variable(vars_, size_t(1));
  HoloPoly cx = HoloPoly::constant(vars_, center.x);
  HoloPoly cy = HoloPoly::constant(vars_, center.y);

  ChartMap primary{id_p, chart_id, vars_, {cx + a, cy + a * b}, 0};
  ChartMap secondary{id_pp, chart_id, vars_, {cx + a * b, cy + b}, 1};

  // Transform the equations of the older exceptional curves.
  for (auto& c : curves_) {
    auto it = c.local_eqs.find(chart_id);
    if (it == c.local_eqs.end()) continue;
    if (it->second.eq.is_constant()) continue;  // curve misses the blown-up chart
    for (const ChartMap* nc : {&primary, &secondary}) {
      HoloPoly pulled = it->second.eq.substitute(
          std::vector<HoloPoly>{nc->blow_down[0], nc->blow_down[1]});
      size_t e = *nc->exceptional_index;
      unsigned m = 0;
      if (!pulled.is_zero()) {
        m = ~0u;
        for (const auto& [exps, coef] : pulled.terms()) m = std::min(m, exps[e]);
      }
      if (m > 0) {
        Exps strip(vars_.size(), 0);
        strip[e] = m;
        pulled = pulled.divide_monomial(strip);
      }
      c.local_eqs.emplace(nc->chart_id, CurveLocalEq{pulled, m});
    }
  }

  ExceptionalCurve curve;
  curve.curve_id = curve_id;
  curve.origin_chart = chart_id;
  curve.center = center;
  curve.local_eqs.emplace(id_p, CurveLocalEq{a, 0});
  curve.local_eqs.emplace(id_pp, CurveLocalEq{b, 0});
  curves_.push_back(std::move(curve));

  atlas_.emplace(id_p, std::move(primary));
  atlas_.emplace(id_pp, std::move(secondary));
  order_.push_back(id_p);
  order_.push_back(id_pp);
  return {id_p, id_pp};
}

std::array<HoloPoly, 2> BlowupTower::total_blow_down(const std::string& chart_id) const {
  const ChartMap* c = &chart(chart_id);
  std::array<HoloPoly, 2> acc = c->blow_down;
  while (!c->base_id.empty()) {
    c = &chart(c->base_id);
    std::vector<HoloPoly> images{acc[0], acc[1]};
    acc = {c->blow_down[0].substitute(images), c->blow_down[1].substitute(images)};
  }
  return acc;
}

HoloPoly BlowupTower::pullback(const std::string& chart_id, const HoloPoly& p) const {
  check_same_vars(p.vars(), vars_, "BlowupTower::pullback");
  auto bd = total_blow_down(chart_id);
  return p.substitute(std::vector<HoloPoly>{bd[0], bd[1]});
}

HermPoly BlowupTower::pullback(const std::string& chart_id, const HermPoly& p) const {
  check_same_vars(p.vars(), vars_, "BlowupTower::pullback");
  auto bd = total_blow_down(chart_id);
  return p.substitute({herm(bd[0]), herm(bd[1])});
}

std::vector<size_t> BlowupTower::exceptional_coords(const std::string& chart_id) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < vars_.size(); ++i) {
    HoloPoly coord = HoloPoly::variable(vars_, i);
    for (const auto& c : curves_) {
      auto it = c.local_eqs.find(chart_id);
      if (it != c.local_eqs.end() && it->second.eq == coord) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::string BlowupTower::describe() const {
  std::string s;
  s += "blow-up tower over chart " + root_id_ + " (" + std::to_string(step_) + " steps)\n";
  for (const auto& id : order_) {
    const ChartMap& c = chart(id);
    if (c.base_id.empty()) {
      s += "  chart " + id + ": root plane, coordinates " + varlist_str(c.vars) + "\n";
      continue;
    }
    s += "  chart " + id + " over " + c.base_id + ": (z1, z2) -> (" + c.blow_down[0].str() +
         ", " + c.blow_down[1].str() + ")";
    if (c.exceptional_index)
      s += ", exceptional coordinate " + c.vars[*c.exceptional_index];
    s += "\n";
  }
  for (const auto& cv : curves_) {
    s += "  curve " + cv.curve_id + " from center " + cv.center.str() + " of " +
         cv.origin_chart + ":";
    bool first = true;
    for (const auto& [cid, leq] : cv.local_eqs) {
      s += first ? " " : "; ";
      first = false;
      if (leq.eq.is_constant())
        s += cid + ": absent";
      else
        s += cid + ": {" + leq.eq.str() + " = 0}";
      if (leq.stripped_power > 0)
        s += " (stripped power " + std::to_string(leq.stripped_power) + ")";
    }
    s += "\n";
  }
  return s;
}

}  // namespace crgeo
