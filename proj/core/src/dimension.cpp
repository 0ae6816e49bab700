#include "fatpoints/dimension.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fatpoints/error.hpp"
#include "fatpoints/standard_form.hpp"

namespace fatpoints {

std::string_view to_string(StepKind kind) noexcept {
  switch (kind) {
    case StepKind::sort: return "Sort";
    case StepKind::remove_plane: return "RemovePlane";
    case StepKind::cremona: return "Cremona";
    case StepKind::clamp: return "Clamp";
    case StepKind::declare_empty: return "DeclareEmpty";
  }
  return "Unknown";
}

StandardDim standard_dim(const SystemP3& s) {
  if (effective_points(s.mults) > kMaxPoints) {
    throw Error(Errc::too_many_points, to_string(s));
  }
  if (!is_standard(s)) throw Error(Errc::not_standard_form, to_string(s));

  StandardDim out;
  const std::size_t r = effective_points(s.mults);
  auto add_term = [&](std::size_t index, Int t) {
    if (t < 2) return;
    CorrectionTerm term{index, t, binom(t + 1, 3)};
    out.correction = checked_add(out.correction, term.contribution);
    out.terms.push_back(term);
  };
  add_term(1, checked_sub(checked_add(s.mult(1), s.mult(2)), s.degree));
  for (std::size_t i = 1; i < r; ++i) {
    add_term(i + 1, checked_sub(checked_add(s.mult(0), s.mult(i)), s.degree));
  }
  out.raw = checked_add(vdim_p3(s), out.correction);
  out.empty = s.degree < 0 || s.degree < s.mult(0);
  return out;
}

namespace {

/// Working copy of the system with the original label of every point.
struct LabelledSystem {
  Int degree = 0;
  std::vector<Int> mults;
  std::vector<std::size_t> labels;

  SystemP3 view() const { return SystemP3{degree, mults}; }
};

class Reducer {
 public:
  explicit Reducer(const SystemP3& input) : input_points_(input.points()) {
    state_.degree = input.degree;
    state_.mults = input.mults;
    state_.labels.resize(input.points());
    std::iota(state_.labels.begin(), state_.labels.end(), std::size_t{0});
    step_limit_ = 2 * static_cast<std::size_t>(std::max<Int>(input.degree, 0)) + 10;
  }

  DimReport run() {
    DimReport report;
    for (;;) {
      normalize_state();
      const SystemP3 current = state_.view();

      if (state_.degree < 0) return finish_empty(std::move(report), "negative degree");
      if (!state_.mults.empty() && state_.mults[0] > state_.degree) {
        return finish_empty(std::move(report), "multiplicity exceeds degree");
      }

      pad_to(3);
      const Int twice = checked_mul(2, state_.degree);
      const Int top3 = checked_add(checked_add(state_.mults[0], state_.mults[1]), state_.mults[2]);
      if (twice < top3) {
        ReductionStep step{StepKind::remove_plane, current, {}, {}, 0, {}};
        state_.degree -= 1;
        for (std::size_t i = 0; i < 3; ++i) state_.mults[i] -= 1;
        step.points.assign(state_.labels.begin(), state_.labels.begin() + 3);
        step.after = state_.view();
        record(std::move(step));
        continue;
      }

      pad_to(4);
      const Int k = checked_sub(twice, checked_add(top3, state_.mults[3]));
      if (k < 0) {
        ReductionStep step{StepKind::cremona, current, {}, {}, k, {}};
        state_.degree = checked_add(state_.degree, k);
        for (std::size_t i = 0; i < 4; ++i) {
          state_.mults[i] += k;
          // 2d >= m1 + m2 + m3 held, so m_i + k >= 0 for every base point.
          if (state_.mults[i] < 0) {
            throw std::logic_error("cremona step produced a negative multiplicity");
          }
        }
        step.points.assign(state_.labels.begin(), state_.labels.begin() + 4);
        step.after = state_.view();
        record(std::move(step));
        continue;
      }

      drop_zeros();
      report.terminal = state_.view();
      const StandardDim sd = standard_dim(report.terminal);
      report.dim = sd.dim();
      report.correction_terms = sd.terms;
      return finalize(std::move(report));
    }
  }

  const std::vector<ReductionStep>& trace() const { return trace_; }

 private:
  void record(ReductionStep step) {
    trace_.push_back(std::move(step));
    if (trace_.size() > step_limit_) {
      throw std::logic_error("reduction exceeded its step bound");
    }
  }

  void normalize_state() {
    const SystemP3 before = state_.view();
    std::vector<std::size_t> clamped;
    for (std::size_t i = 0; i < state_.mults.size(); ++i) {
      if (state_.mults[i] < 0) {
        state_.mults[i] = 0;
        clamped.push_back(state_.labels[i]);
      }
    }
    if (!clamped.empty()) {
      record({StepKind::clamp, before, state_.view(), clamped, 0, {}});
    }

    const SystemP3 unsorted = state_.view();
    std::vector<std::size_t> idx(state_.mults.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return state_.mults[a] > state_.mults[b]; });
    LabelledSystem sorted;
    sorted.degree = state_.degree;
    for (std::size_t i : idx) {
      if (state_.mults[i] == 0) continue;
      sorted.mults.push_back(state_.mults[i]);
      sorted.labels.push_back(state_.labels[i]);
    }
    std::vector<std::size_t> old_positive;
    for (std::size_t i = 0; i < state_.mults.size(); ++i) {
      if (state_.mults[i] != 0) old_positive.push_back(state_.labels[i]);
    }
    const bool reordered = old_positive != sorted.labels;
    state_ = std::move(sorted);
    if (reordered) {
      record({StepKind::sort, unsorted, state_.view(), state_.labels, 0, {}});
    }
  }

  void pad_to(std::size_t count) {
    while (state_.mults.size() < count) {
      state_.mults.push_back(0);
      state_.labels.push_back(fresh_label());
    }
  }

  void drop_zeros() {
    while (!state_.mults.empty() && state_.mults.back() == 0) {
      state_.mults.pop_back();
      state_.labels.pop_back();
    }
  }

  // Smallest auxiliary label not currently in use.
  std::size_t fresh_label() const {
    std::size_t label = input_points_;
    while (std::find(state_.labels.begin(), state_.labels.end(), label) != state_.labels.end()) {
      ++label;
    }
    return label;
  }

  DimReport finish_empty(DimReport report, std::string reason) {
    ReductionStep step{StepKind::declare_empty, state_.view(), state_.view(), {}, 0, std::move(reason)};
    record(std::move(step));
    report.terminal = state_.view();
    report.dim = -1;
    return finalize(std::move(report));
  }

  DimReport finalize(DimReport report) {
    report.trace = std::move(trace_);
    return report;
  }

  std::size_t input_points_;
  std::size_t step_limit_;
  LabelledSystem state_;
  std::vector<ReductionStep> trace_;
};

}  // namespace

DimReport full_dim(const SystemP3& s) {
  if (effective_points(s.mults) > kMaxPoints) {
    throw Error(Errc::too_many_points, to_string(s) + " has more than eight points");
  }
  DimReport report = Reducer(s).run();
  report.vdim = vdim_p3(s);
  report.speciality = report.dim > report.vdim ? checked_sub(report.dim, report.vdim) : 0;
  report.special = report.dim > std::max<Int>(report.vdim, -1);
  return report;
}

bool claim_c1_identity(const SystemP3& s) {
  const std::size_t r = effective_points(s.mults);
  auto t = [&](std::size_t i) { return s.mult(0) + s.mult(i - 1) - s.degree; };  // 1-based, i >= 2

  std::size_t b = 0;
  for (std::size_t i = 2; i <= r; ++i) {
    if (t(i) >= 1) b = i;
  }
  if (b < 4) {
    throw Error(Errc::precondition_failed, "no index b >= 4 with t_b >= 1 in " + to_string(s));
  }

  const Int mb = s.mult(b - 1);
  const Int tb = t(b);
  SystemP3 nb;
  nb.degree = s.degree - 2 * mb + 2 * tb - 2;
  for (std::size_t i = 1; i < b; ++i) nb.mults.push_back(s.mult(i - 1) - mb + tb - 1);
  nb.mults.push_back(tb - 1);

  Int sum = 0;
  for (std::size_t i = 2; i <= b; ++i) sum = checked_add(sum, binom(t(i) + 1, 3));

  const bool degree_ok = nb.degree == nb.mults.front() - 1;
  const bool chi_ok = checked_add(vdim_p3(nb), 1) == -sum;
  return degree_ok && chi_ok;
}

}  // namespace fatpoints
