#include "segrekit/hypersurface.hpp"

#include <cmath>
#include <future>
#include <thread>

namespace segrekit {

void HypersurfaceParams::validate() const {
  if (!(eps0 > 0))
    throw std::invalid_argument("params: eps0 > 0 violated");
  if (!(c > 2 && c < Rat(16, 7)))
    throw std::invalid_argument("params: 2 < c < 16/7 violated");
  if (!(eps >= 0 && eps < 1))
    throw std::invalid_argument("params: 0 <= eps < 1 violated");
}

Hypersurface make_family(const HypersurfaceParams& params) {
  params.validate();
  Poly p;
  // eps0 * |z|^8
  p.add_term(mono(4, 0, 4, 0), ComplexRational(params.eps0));
  // eps0 * c * Re(|z|^2 z^6) = (eps0*c/2) * (z^7 zbar + z zbar^7)
  ComplexRational half_c0(Rat(params.eps0 * params.c / 2));
  p.add_term(mono(7, 0, 1, 0), half_c0);
  p.add_term(mono(1, 0, 7, 0), half_c0);
  // |w|^2
  p.add_term(mono(0, 1, 0, 1), ComplexRational(1));
  // |z|^10
  p.add_term(mono(5, 0, 5, 0), ComplexRational(1));
  // eps * |z|^2
  if (params.eps != 0) p.add_term(mono(1, 0, 1, 0), ComplexRational(params.eps));
  // -1
  p.add_term(mono(0, 0, 0, 0), ComplexRational(-1));
  return {HermPoly(std::move(p)), params};
}

Hypersurface make_unit_sphere() {
  Poly p;
  p.add_term(mono(1, 0, 1, 0), ComplexRational(1));
  p.add_term(mono(0, 1, 0, 1), ComplexRational(1));
  p.add_term(mono(0, 0, 0, 0), ComplexRational(-1));
  return {HermPoly(std::move(p)), std::nullopt};
}

PointClass classify_point(const Hypersurface& h, const Point2& p) {
  Rat v = h.rho.eval_real(p.z, p.w);
  if (v == 0) return PointClass::On;
  return v < 0 ? PointClass::Inside : PointClass::Outside;
}

PointClass classify_point(const Hypersurface& h, const DPoint2& p, double tol) {
  double v = h.rho.eval_real_double(p.z, p.w);
  if (std::abs(v) <= tol) return PointClass::On;
  return v < 0 ? PointClass::Inside : PointClass::Outside;
}

std::pair<ComplexRational, ComplexRational> gradient(const Hypersurface& h, const Point2& p) {
  const Poly& rc = h.rho.complexify();
  std::array<ComplexRational, kNumVars> at{p.z, p.w, p.z.conj(), p.w.conj()};
  return {rc.derivative(Var::Z).eval(at), rc.derivative(Var::W).eval(at)};
}

std::pair<std::complex<double>, std::complex<double>> gradient(const Hypersurface& h,
                                                               const DPoint2& p) {
  const Poly& rc = h.rho.complexify();
  std::array<std::complex<double>, kNumVars> at{p.z, p.w, std::conj(p.z), std::conj(p.w)};
  return {rc.derivative(Var::Z).eval_double(at), rc.derivative(Var::W).eval_double(at)};
}

Rat levi_scalar(const Hypersurface& h, const Point2& p) {
  const Poly& rc = h.rho.complexify();
  std::array<ComplexRational, kNumVars> at{p.z, p.w, p.z.conj(), p.w.conj()};
  ComplexRational rz = rc.derivative(Var::Z).eval(at);
  ComplexRational rw = rc.derivative(Var::W).eval(at);
  if (rz.is_zero() && rw.is_zero())
    throw std::domain_error("levi_scalar: not a smooth point (zero gradient)");
  ComplexRational rzzb = rc.derivative(Var::Z).derivative(Var::ZB).eval(at);
  ComplexRational rzwb = rc.derivative(Var::Z).derivative(Var::WB).eval(at);
  ComplexRational rwwb = rc.derivative(Var::W).derivative(Var::WB).eval(at);
  ComplexRational cross = rzwb * rw * rz.conj();
  ComplexRational lam = rzzb * ComplexRational(rw.norm2()) -
                        (cross + cross.conj()) +
                        rwwb * ComplexRational(rz.norm2());
  if (!lam.is_real()) throw std::logic_error("levi_scalar: non-real value");
  return lam.re();
}

double levi_scalar(const Hypersurface& h, const DPoint2& p) {
  const Poly& rc = h.rho.complexify();
  std::array<std::complex<double>, kNumVars> at{p.z, p.w, std::conj(p.z), std::conj(p.w)};
  std::complex<double> rz = rc.derivative(Var::Z).eval_double(at);
  std::complex<double> rw = rc.derivative(Var::W).eval_double(at);
  if (std::abs(rz) == 0.0 && std::abs(rw) == 0.0)
    throw std::domain_error("levi_scalar: not a smooth point (zero gradient)");
  std::complex<double> rzzb = rc.derivative(Var::Z).derivative(Var::ZB).eval_double(at);
  std::complex<double> rzwb = rc.derivative(Var::Z).derivative(Var::WB).eval_double(at);
  std::complex<double> rwwb = rc.derivative(Var::W).derivative(Var::WB).eval_double(at);
  return (rzzb * std::norm(rw) - 2.0 * std::real(rzwb * rw * std::conj(rz)) +
          rwwb * std::norm(rz))
      .real();
}

namespace {

// s(z) = 1 - eps0(|z|^8 + c Re(|z|^2 z^6)) - |z|^10 - eps |z|^2;  w-moduli
// on the surface satisfy |w|^2 = s(z).
double admissible_s(const HypersurfaceParams& q, std::complex<double> z) {
  double eps0 = q.eps0.get_d(), c = q.c.get_d(), eps = q.eps.get_d();
  double r2 = std::norm(z);
  std::complex<double> z6 = z * z * z;
  z6 *= z6;
  double re_term = r2 * z6.real();
  double r8 = r2 * r2 * r2 * r2;
  return 1.0 - eps0 * (r8 + c * re_term) - r8 * r2 - eps * r2;
}

double admissible_radius(const HypersurfaceParams& q, double angle) {
  std::complex<double> dir = std::polar(1.0, angle);
  double lo = 0.0, hi = 1.5;
  while (admissible_s(q, hi * dir) > 0) hi += 0.5;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    if (admissible_s(q, mid * dir) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

constexpr int kWPhases = 16;
constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::vector<DPoint2> sample_surface(const Hypersurface& h, int count, uint64_t seed) {
  if (count <= 0) throw std::invalid_argument("sample_surface: count must be positive");
  if (!h.params) throw std::invalid_argument("sample_surface: surface is not a family member");
  const HypersurfaceParams& q = *h.params;
  Rng rng = Rng(seed).derive("surface-sampler");

  std::vector<DPoint2> pts;
  pts.reserve(static_cast<std::size_t>(count));

  // z = 0 slice first: (0, e^{i k pi/8}) lie on the surface exactly.
  for (int k = 0; k < kWPhases && static_cast<int>(pts.size()) < count; ++k)
    pts.push_back({0.0, std::polar(1.0, 2.0 * kPi * k / kWPhases)});

  while (static_cast<int>(pts.size()) < count) {
    double angle = rng.next_double() * 2.0 * kPi;
    double rmax = admissible_radius(q, angle);
    double r = rmax * std::sqrt(rng.next_double());
    std::complex<double> z = std::polar(r, angle);
    double s = admissible_s(q, z);
    if (s < 0) continue;  // jitter fell outside; resample
    int phase = static_cast<int>(rng.next_int(0, kWPhases - 1));
    std::complex<double> w = std::sqrt(s) * std::polar(1.0, 2.0 * kPi * phase / kWPhases);
    pts.push_back({z, w});
  }
  return pts;
}

namespace {

struct ChunkMin {
  double min_grad = std::numeric_limits<double>::infinity();
  double min_levi = std::numeric_limits<double>::infinity();
  double max_res = 0.0;
  DPoint2 arg_grad{}, arg_levi{};
};

ChunkMin scan_chunk(const Hypersurface& h, const std::vector<DPoint2>& pts, std::size_t lo,
                    std::size_t hi) {
  ChunkMin m;
  for (std::size_t i = lo; i < hi; ++i) {
    const DPoint2& p = pts[i];
    auto [gz, gw] = gradient(h, p);
    double gn = std::sqrt(std::norm(gz) + std::norm(gw));
    double lv = levi_scalar(h, p);
    double res = std::abs(h.rho.eval_real_double(p.z, p.w));
    if (gn < m.min_grad) {
      m.min_grad = gn;
      m.arg_grad = p;
    }
    if (lv < m.min_levi) {
      m.min_levi = lv;
      m.arg_levi = p;
    }
    if (res > m.max_res) m.max_res = res;
  }
  return m;
}

}  // namespace

ScanReport scan(const Hypersurface& h, int count, uint64_t seed) {
  std::vector<DPoint2> pts = sample_surface(h, count, seed);

  const std::size_t chunk = 1024;
  std::vector<std::future<ChunkMin>> futs;
  for (std::size_t lo = 0; lo < pts.size(); lo += chunk) {
    std::size_t hi = std::min(lo + chunk, pts.size());
    futs.push_back(std::async(std::launch::async, scan_chunk, std::cref(h), std::cref(pts), lo, hi));
  }
  ChunkMin acc;
  for (auto& f : futs) {
    ChunkMin m = f.get();
    if (m.min_grad < acc.min_grad) {
      acc.min_grad = m.min_grad;
      acc.arg_grad = m.arg_grad;
    }
    if (m.min_levi < acc.min_levi) {
      acc.min_levi = m.min_levi;
      acc.arg_levi = m.arg_levi;
    }
    if (m.max_res > acc.max_res) acc.max_res = m.max_res;
  }

  ScanReport r;
  r.n_samples = static_cast<int>(pts.size());
  r.seed = seed;
  r.min_grad_norm = acc.min_grad;
  r.min_levi = acc.min_levi;
  r.max_rho_residual = acc.max_res;
  r.argmin_grad = acc.arg_grad;
  r.argmin_levi = acc.arg_levi;
  return r;
}

Point2 rationalize_point(const DPoint2& p, unsigned long den_bound) {
  return {crat_rationalize(p.z, den_bound), crat_rationalize(p.w, den_bound)};
}

}  // namespace segrekit
