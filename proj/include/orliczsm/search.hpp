#ifndef ORLICZSM_SEARCH_HPP
#define ORLICZSM_SEARCH_HPP

#include <cmath>
#include <numbers>

namespace orliczsm {

struct SearchResult {
  double x = 0.0;
  double value = 0.0;
  double bracket_width = 0.0;
};

/// Golden-section search for the maximum of f on [lo, hi]. Exact for
/// unimodal f; otherwise returns a local maximum inside the bracket.
template <class F>
SearchResult golden_section_max(F&& f, double lo, double hi, double x_tol,
                                int max_iter = 200) {
  constexpr double inv_phi = std::numbers::phi - 1.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? SearchResult{c, fc, b - a} : SearchResult{d, fd, b - a};
}

template <class F>
SearchResult golden_section_min(F&& f, double lo, double hi, double x_tol,
                                int max_iter = 200) {
  auto r = golden_section_max([&](double x) { return -f(x); }, lo, hi, x_tol, max_iter);
  r.value = -r.value;
  return r;
}

}  // namespace orliczsm

#endif  // ORLICZSM_SEARCH_HPP
