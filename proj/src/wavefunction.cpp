#include "proxwell/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "proxwell/propagate.hpp"

namespace proxwell {

namespace {

using detail::LayerForm;

// c * exp(e), evaluated through logs when the bare exponential would leave
// the double range. exp of a large negative exponent folds to 0 as expected.
double scaled_term(double c, double e) {
  if (c == 0.0) {
    return 0.0;
  }
  if (std::abs(e) <= 600.0) {
    return c * std::exp(e);
  }
  const double magnitude = std::exp(e + std::log(std::abs(c)));
  return c < 0.0 ? -magnitude : magnitude;
}

// c^2 * exp(e) with the same guard.
double scaled_square_term(double c, double e) {
  if (c == 0.0) {
    return 0.0;
  }
  if (std::abs(e) <= 600.0) {
    return c * c * std::exp(e);
  }
  return std::exp(e + 2.0 * std::log(std::abs(c)));
}

LayerForm make_form(const Layer& layer, double energy, const StateVector& edge,
                    double rel_log) {
  const double u = energy - layer.potential;
  if (std::abs(u) <=
      detail::kDegenerateTol * std::max(1.0, std::abs(layer.potential))) {
    return {LayerForm::Kind::linear, 0.0, edge.psi, edge.dpsi, rel_log};
  }
  if (u > 0.0) {
    const double k = std::sqrt(u);
    return {LayerForm::Kind::oscillatory, k, edge.psi, edge.dpsi / k, rel_log};
  }
  const double q = std::sqrt(-u);
  double grow = 0.5 * (edge.psi + edge.dpsi / q);
  double decay = 0.5 * (edge.psi - edge.dpsi / q);
  // A coefficient below the cancellation noise of the edge state is a genuine
  // zero of that mode; keeping the noise would blow up as e^{qw} across a
  // deep barrier.
  const double noise = 1e-13 * (std::abs(edge.psi) + std::abs(edge.dpsi) / q);
  if (std::abs(grow) < noise) {
    grow = 0.0;
  }
  if (std::abs(decay) < noise) {
    decay = 0.0;
  }
  return {LayerForm::Kind::evanescent, q, grow, decay, rel_log};
}

// max |psi| over the layer, including the exp(log_scale) factor.
double layer_peak(const LayerForm& form, double width) {
  switch (form.kind) {
    case LayerForm::Kind::oscillatory: {
      const double k = form.rate;
      const double amplitude = std::hypot(form.c0, form.c1);
      const double phase = std::atan2(form.c1, form.c0);
      // |psi| = amplitude |cos(kt - phase)|; the amplitude is attained iff
      // kt = phase + m pi has an integer solution with t in [0, width].
      const double m_lo = std::ceil(-phase / std::numbers::pi);
      const double m_hi = std::floor((k * width - phase) / std::numbers::pi);
      double peak;
      if (m_lo <= m_hi) {
        peak = amplitude;
      } else {
        const double at_end = std::abs(form.c0 * std::cos(k * width) +
                                       form.c1 * std::sin(k * width));
        peak = std::max(std::abs(form.c0), at_end);
      }
      return peak * std::exp(form.log_scale);
    }
    case LayerForm::Kind::evanescent: {
      const double q = form.rate;
      double peak = std::abs(scaled_term(form.c0 + form.c1, form.log_scale));
      const double at_end =
          std::abs(scaled_term(form.c0, q * width + form.log_scale) +
                   scaled_term(form.c1, -q * width + form.log_scale));
      peak = std::max(peak, at_end);
      if (form.c0 * form.c1 > 0.0) {
        const double t_ext = 0.5 * std::log(form.c1 / form.c0) / q;
        if (t_ext > 0.0 && t_ext < width) {
          peak = std::max(peak, std::abs(scaled_term(
                                    2.0 * std::sqrt(form.c0 * form.c1),
                                    form.log_scale)));
        }
      }
      return peak;
    }
    case LayerForm::Kind::linear: {
      return std::max(std::abs(form.c0), std::abs(form.c0 + form.c1 * width)) *
             std::exp(form.log_scale);
    }
  }
  return 0.0;
}

// integral of psi^2 over the layer, including the exp(2 log_scale) factor.
double layer_l2(const LayerForm& form, double width) {
  switch (form.kind) {
    case LayerForm::Kind::oscillatory: {
      const double k = form.rate;
      const double s2 = std::sin(2.0 * k * width);
      const double c2 = std::cos(2.0 * k * width);
      const double a = form.c0, b = form.c1;
      const double integral = a * a * (0.5 * width + s2 / (4.0 * k)) +
                              b * b * (0.5 * width - s2 / (4.0 * k)) +
                              a * b * (1.0 - c2) / (2.0 * k);
      return integral * std::exp(2.0 * form.log_scale);
    }
    case LayerForm::Kind::evanescent: {
      const double q = form.rate;
      const double qw = q * width;
      const double a = form.c0, b = form.c1;
      if (qw + std::abs(form.log_scale) < 290.0) {
        const double integral = a * a * std::expm1(2.0 * qw) / (2.0 * q) -
                                b * b * std::expm1(-2.0 * qw) / (2.0 * q) +
                                2.0 * a * b * width;
        return integral * std::exp(2.0 * form.log_scale);
      }
      const double e2 = 2.0 * form.log_scale;
      return (scaled_square_term(a, 2.0 * qw + e2) - scaled_square_term(a, e2) +
              scaled_square_term(b, e2) - scaled_square_term(b, -2.0 * qw + e2)) /
                 (2.0 * q) +
             scaled_term(2.0 * a * b * width, e2);
    }
    case LayerForm::Kind::linear: {
      const double a = form.c0, b = form.c1;
      const double integral = a * a * width + a * b * width * width +
                              b * b * width * width * width / 3.0;
      return integral * std::exp(2.0 * form.log_scale);
    }
  }
  return 0.0;
}

}  // namespace

PiecewiseWavefunction::PiecewiseWavefunction(PotentialStack stack, double energy,
                                             Normalization norm,
                                             std::vector<LayerForm> forms)
    : stack_(std::move(stack)),
      energy_(energy),
      normalization_(norm),
      forms_(std::move(forms)) {}

void PiecewiseWavefunction::evaluate(std::size_t layer, double offset,
                                     double& psi_out, double& dpsi_out) const {
  const LayerForm& form = forms_[layer];
  switch (form.kind) {
    case LayerForm::Kind::oscillatory: {
      const double k = form.rate;
      const double c = std::cos(k * offset);
      const double s = std::sin(k * offset);
      const double g = std::exp(form.log_scale);
      psi_out = (form.c0 * c + form.c1 * s) * g;
      dpsi_out = k * (form.c1 * c - form.c0 * s) * g;
      return;
    }
    case LayerForm::Kind::evanescent: {
      const double q = form.rate;
      const double up = q * offset + form.log_scale;
      const double down = -q * offset + form.log_scale;
      psi_out = scaled_term(form.c0, up) + scaled_term(form.c1, down);
      dpsi_out = scaled_term(q * form.c0, up) - scaled_term(q * form.c1, down);
      return;
    }
    case LayerForm::Kind::linear: {
      const double g = std::exp(form.log_scale);
      psi_out = (form.c0 + form.c1 * offset) * g;
      dpsi_out = form.c1 * g;
      return;
    }
  }
}

double PiecewiseWavefunction::psi(double x) const {
  const LayerLocation loc = stack_.locate(x);
  double p = 0.0, d = 0.0;
  evaluate(loc.index, loc.offset, p, d);
  return p;
}

double PiecewiseWavefunction::dpsi(double x) const {
  const LayerLocation loc = stack_.locate(x);
  double p = 0.0, d = 0.0;
  evaluate(loc.index, loc.offset, p, d);
  return d;
}

std::vector<WavefunctionSample> PiecewiseWavefunction::sample(int n_samples) const {
  if (n_samples < 2) {
    throw std::invalid_argument("sample: need at least 2 samples");
  }
  const double width = stack_.total_width();
  std::vector<WavefunctionSample> samples;
  samples.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double x = i == n_samples - 1 ? width : width * i / (n_samples - 1);
    const LayerLocation loc = stack_.locate(x);
    double p = 0.0, d = 0.0;
    evaluate(loc.index, loc.offset, p, d);
    samples.push_back({x, p, d});
  }
  // The eigenfunction satisfies the wall conditions exactly; the sampled
  // representation carries only the solver residual there, so pin it.
  if (stack_.left_bc() == BoundaryCondition::dirichlet) {
    samples.front().psi = 0.0;
  } else {
    samples.front().dpsi = 0.0;
  }
  if (stack_.right_bc() == BoundaryCondition::dirichlet) {
    samples.back().psi = 0.0;
  } else {
    samples.back().dpsi = 0.0;
  }
  return samples;
}

int PiecewiseWavefunction::count_nodes() const {
  const double width = stack_.total_width();
  const int n = static_cast<int>(std::ceil(1000.0 * width)) + 1;
  const std::vector<WavefunctionSample> samples = sample(std::max(n, 2));
  double peak = 0.0;
  for (const WavefunctionSample& s : samples) {
    peak = std::max(peak, std::abs(s.psi));
  }
  const double floor = 1e-12 * peak;
  int nodes = 0;
  int previous = 0;
  for (const WavefunctionSample& s : samples) {
    if (!(std::abs(s.psi) > floor)) {
      continue;
    }
    const int sign = s.psi > 0.0 ? 1 : -1;
    if (previous != 0 && sign != previous) {
      ++nodes;
    }
    previous = sign;
  }
  return nodes;
}

PiecewiseWavefunction build_wavefunction(const PotentialStack& stack,
                                         double energy, Normalization norm) {
  const MismatchResult residual = mismatch(stack, energy);
  if (!(std::abs(residual.value) < 1e-6)) {
    throw std::invalid_argument(
        "build_wavefunction: E = " + std::to_string(energy) +
        " is not an eigenvalue (boundary residual " +
        std::to_string(residual.value) + ")");
  }

  const std::vector<detail::EdgeState> edges =
      detail::propagate_edges(stack, energy);
  const std::size_t n = stack.size();
  double max_log = edges[0].log_scale;
  for (std::size_t i = 1; i < n; ++i) {
    max_log = std::max(max_log, edges[i].log_scale);
  }

  std::vector<LayerForm> forms;
  forms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    forms.push_back(make_form(stack.layers()[i], energy, edges[i].state,
                              edges[i].log_scale - max_log));
  }

  double global_log = 0.0;
  switch (norm) {
    case Normalization::raw:
      global_log = max_log;
      break;
    case Normalization::max_unit: {
      double peak = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        peak = std::max(peak, layer_peak(forms[i], stack.layers()[i].width));
      }
      global_log = -std::log(peak);
      break;
    }
    case Normalization::l2_unit: {
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        total += layer_l2(forms[i], stack.layers()[i].width);
      }
      global_log = -0.5 * std::log(total);
      break;
    }
  }
  for (LayerForm& form : forms) {
    form.log_scale += global_log;
  }
  return PiecewiseWavefunction(stack, energy, norm, std::move(forms));
}

PiecewiseWavefunction build_wavefunction(const PotentialStack& stack,
                                         double energy) {
  const bool pure_neumann = stack.left_bc() == BoundaryCondition::neumann &&
                            stack.right_bc() == BoundaryCondition::neumann;
  return build_wavefunction(
      stack, energy,
      pure_neumann ? Normalization::max_unit : Normalization::l2_unit);
}

}  // namespace proxwell
