#include "padicvoa/axioms.hpp"

#include <stdexcept>

namespace padicvoa {

namespace {

AxiomLab<HeisenbergModel> lab(long p) { return AxiomLab<HeisenbergModel>(HeisenbergModel{}, p); }

void emit(SweepSummary& summary, DefectReport<HeisenbergState>&& report, const std::vector<HeisenbergState>& basis,
          std::initializer_list<std::pair<const char*, std::size_t>> inputs, const RowCallback& on_row) {
  ++summary.checked;
  if (!report.is_zero()) ++summary.nonzero;
  if (!on_row) return;
  std::string desc = report.description;
  for (const auto& [name, index] : inputs) desc += std::string(" ") + name + "=" + to_string(basis[index]);
  report.description = std::move(desc);
  on_row(report);
}

}  // namespace

DefectReport<HeisenbergState> jacobi_defect(const HeisenbergState& u, const HeisenbergState& v,
                                            const HeisenbergState& w, int r, int s, int t, long p) {
  return lab(p).jacobi(u, v, w, r, s, t);
}

DefectReport<HeisenbergState> commutator_defect(const HeisenbergState& u, const HeisenbergState& v,
                                                 const HeisenbergState& w, int r, int s, long p) {
  return lab(p).commutator(u, v, w, r, s);
}

DefectReport<HeisenbergState> associator_defect(const HeisenbergState& u, const HeisenbergState& v,
                                                const HeisenbergState& w, int t, int s, long p) {
  return lab(p).associator(u, v, w, t, s);
}

DefectReport<HeisenbergState> residue_product_defect(const HeisenbergState& a, const HeisenbergState& b,
                                                     const HeisenbergState& w, int t, int n, long p) {
  HeisenbergState defect = residue_product_mode(a, b, t, n, w);
  defect -= mode_action(mode_action(a, t, b), n, w);
  return make_report(std::move(defect), p, {{"t", t}, {"n", n}}, "residue");
}

std::vector<LocalityPoint> locality_profile(const HeisenbergState& u, const HeisenbergState& v,
                                            const HeisenbergState& w, int t_max, long p) {
  if (t_max < 0) throw std::invalid_argument("locality_profile: t_max must be >= 0");
  const auto l = lab(p);
  return l.locality_profile(u, v, w, t_max, l.default_locality_window(u, v, w));
}

IsometryProbe isometry_probe(const HeisenbergState& a, long p, int grade_bound, int n_lo, int n_hi) {
  if (a.is_zero()) throw std::invalid_argument("isometry_probe: zero state");
  NormExponent lhs = NormExponent::neg_infinity();
  for (const auto& b : basis_states_up_to(grade_bound)) {
    for (int n = n_lo; n <= n_hi; ++n) {
      lhs = max(lhs, sup_norm_exponent(mode_action(a, n, b), p));
    }
  }
  return {lhs, sup_norm_exponent(a, p)};
}

SweepSummary jacobi_sweep(int max_grade, int window, long p, const RowCallback& on_row) {
  const auto basis = basis_states_up_to(max_grade);
  const auto l = lab(p);
  SweepSummary summary;
  for (std::size_t iu = 0; iu < basis.size(); ++iu) {
    for (std::size_t iv = 0; iv < basis.size(); ++iv) {
      for (std::size_t iw = 0; iw < basis.size(); ++iw) {
        for (int r = -window; r <= window; ++r) {
          for (int s = -window; s <= window; ++s) {
            for (int t = -window; t <= window; ++t) {
              emit(summary, l.jacobi(basis[iu], basis[iv], basis[iw], r, s, t), basis,
                   {{"u", iu}, {"v", iv}, {"w", iw}}, on_row);
            }
          }
        }
      }
    }
  }
  return summary;
}

SweepSummary commutator_sweep(int max_grade, int window, long p, const RowCallback& on_row) {
  const auto basis = basis_states_up_to(max_grade);
  const auto l = lab(p);
  SweepSummary summary;
  for (std::size_t iu = 0; iu < basis.size(); ++iu) {
    for (std::size_t iv = 0; iv < basis.size(); ++iv) {
      for (std::size_t iw = 0; iw < basis.size(); ++iw) {
        for (int r = -window; r <= window; ++r) {
          for (int s = -window; s <= window; ++s) {
            emit(summary, l.commutator(basis[iu], basis[iv], basis[iw], r, s), basis,
                 {{"u", iu}, {"v", iv}, {"w", iw}}, on_row);
          }
        }
      }
    }
  }
  return summary;
}

SweepSummary associator_sweep(int max_grade, int window, long p, const RowCallback& on_row) {
  const auto basis = basis_states_up_to(max_grade);
  const auto l = lab(p);
  SweepSummary summary;
  for (std::size_t iu = 0; iu < basis.size(); ++iu) {
    for (std::size_t iv = 0; iv < basis.size(); ++iv) {
      for (std::size_t iw = 0; iw < basis.size(); ++iw) {
        for (int t = -window; t <= window; ++t) {
          for (int s = -window; s <= window; ++s) {
            emit(summary, l.associator(basis[iu], basis[iv], basis[iw], t, s), basis,
                 {{"u", iu}, {"v", iv}, {"w", iw}}, on_row);
          }
        }
      }
    }
  }
  return summary;
}

SweepSummary residue_sweep(int max_grade, int window, long p, const RowCallback& on_row) {
  const auto basis = basis_states_up_to(max_grade);
  SweepSummary summary;
  for (std::size_t ia = 0; ia < basis.size(); ++ia) {
    for (std::size_t ib = 0; ib < basis.size(); ++ib) {
      for (std::size_t iw = 0; iw < basis.size(); ++iw) {
        for (int t = -window; t <= window; ++t) {
          for (int n = -window; n <= window; ++n) {
            emit(summary, residue_product_defect(basis[ia], basis[ib], basis[iw], t, n, p), basis,
                 {{"a", ia}, {"b", ib}, {"w", iw}}, on_row);
          }
        }
      }
    }
  }
  return summary;
}

SweepSummary translation_sweep(int max_grade, int window, long p, const RowCallback& on_row) {
  const auto basis = basis_states_up_to(max_grade);
  const auto l = lab(p);
  SweepSummary summary;
  for (std::size_t ia = 0; ia < basis.size(); ++ia) {
    for (std::size_t iw = 0; iw < basis.size(); ++iw) {
      for (int n = -window; n <= window; ++n) {
        emit(summary, l.translation(basis[ia], n, basis[iw]), basis, {{"a", ia}, {"w", iw}}, on_row);
      }
    }
  }
  return summary;
}

}  // namespace padicvoa
