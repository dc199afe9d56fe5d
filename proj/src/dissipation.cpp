#include "rydcav/dissipation.hpp"

#include <cmath>
#include <numbers>

#include "rydcav/error.hpp"

namespace rydcav {
namespace {

struct Term {
  double coef;
  int to, from;
};

void add(std::vector<CollapseChannel>& out, const SystemParams& p, double rate, const std::string& name,
         std::initializer_list<Term> terms) {
  if (p.form == LindbladForm::Sum) {
    CollapseChannel c{rate, Mat::Zero(), name};
    for (const Term& t : terms) c.op(t.to, t.from) += t.coef;
    out.push_back(std::move(c));
    return;
  }
  for (const Term& t : terms) {
    if (t.coef == 0.0) continue;
    CollapseChannel c{rate, Mat::Zero(), name};
    c.op(t.to, t.from) = t.coef;
    out.push_back(std::move(c));
  }
}

}  // namespace

std::vector<CollapseChannel> make_channels(const SystemParams& p) {
  p.validate();
  const double n = p.n_atoms;
  const double r2 = std::numbers::sqrt2;
  std::vector<CollapseChannel> out;

  add(out, p, p.gamma_r, "gamma_r",
      {{1.0, E0, R0}, {1.0, E1, R1}, {r2, ER0, RR0}, {r2, EE0, ER0}, {std::sqrt(2.0 * (n - 1.0)), R0, RR0}});
  add(out, p, p.gamma_perp, "gamma_perp",
      {{std::sqrt(n * (n - 1.0)), L0, ER0},
       {std::sqrt(n * (n - 1.0) / 2.0), L0, EE0},
       {std::sqrt(n), L0, E1},
       {std::sqrt(n), L0, E0}});
  add(out, p, p.kappa, "kappa",
      {{p.ladder == Ladder::Bosonic ? r2 : 1.0, G1, G2}, {1.0, G0, G1}, {1.0, E0, E1}, {1.0, R0, R1}});
  if (p.coupling == CouplingMode::Purcell) {
    add(out, p, p.gamma_p, "gamma_p",
        {{std::sqrt(n), G1, E0},
         {std::sqrt(n), G2, E1},
         {std::sqrt(n - 1.0), R1, ER0},
         {std::sqrt(2.0 * (n - 1.0)), E1, EE0}});
  }
  if (p.deph_r > 0.0) {
    CollapseChannel c{p.deph_r, Mat::Zero(), "deph_r"};
    c.op(L0, R0) = 1.0;
    out.push_back(std::move(c));
  }
  if (p.deph_rr > 0.0) {
    CollapseChannel c{p.deph_rr, Mat::Zero(), "deph_rr"};
    c.op(L0, RR0) = 1.0;
    out.push_back(std::move(c));
  }
  return out;
}

Mat apply_dissipator(const std::vector<CollapseChannel>& channels, const Mat& rho) {
  Mat d = Mat::Zero();
  for (const auto& c : channels) {
    if (c.rate == 0.0) continue;
    const Mat& l = c.op;
    const Mat ld = l.adjoint();
    const Mat ldl = ld * l;
    d.noalias() += c.rate * (2.0 * l * rho * ld - ldl * rho - rho * ldl);
  }
  return d;
}

Mat emission_projector(const std::vector<CollapseChannel>& channels) {
  Mat p = Mat::Zero();
  bool found = false;
  for (const auto& c : channels) {
    if (c.name != "kappa") continue;
    p.noalias() += c.op.adjoint() * c.op;
    found = true;
  }
  if (!found) throw ConfigError("no cavity decay channel", "system.kappa_2pi_mhz");
  return p;
}

double kappa_rate(const std::vector<CollapseChannel>& channels) {
  for (const auto& c : channels)
    if (c.name == "kappa") return c.rate;
  return 0.0;
}

}  // namespace rydcav
