#include "mkdvlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mkdv::fft {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

const PlanPair& plans_for(int n) {
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(plan_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Plans are made on scratch buffers; execution always uses the new-array API.
  std::vector<double> real(static_cast<size_t>(n));
  std::vector<Complex> half(static_cast<size_t>(n / 2 + 1));
  auto* half_ptr = reinterpret_cast<fftw_complex*>(half.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p;
  p.forward = fftw_plan_dft_r2c_1d(n, real.data(), half_ptr, flags);
  p.inverse = fftw_plan_dft_c2r_1d(n, half_ptr, real.data(), flags);
  if (p.forward == nullptr || p.inverse == nullptr) throw std::runtime_error("FFTW planning failed");
  return cache.emplace(n, p).first->second;
}

}  // namespace

void forward_real(std::span<const double> in, std::span<Complex> out_half) {
  const int n = static_cast<int>(in.size());
  if (out_half.size() != static_cast<size_t>(n / 2 + 1)) throw std::invalid_argument("forward_real: size mismatch");
  const auto& p = plans_for(n);
  // r2c does not modify its input.
  fftw_execute_dft_r2c(p.forward, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out_half.data()));
}

void inverse_real(std::span<const Complex> in_half, std::span<double> out) {
  const int n = static_cast<int>(out.size());
  if (in_half.size() != static_cast<size_t>(n / 2 + 1)) throw std::invalid_argument("inverse_real: size mismatch");
  const auto& p = plans_for(n);
  // c2r destroys its input.
  std::vector<Complex> scratch(in_half.begin(), in_half.end());
  fftw_execute_dft_c2r(p.inverse, reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
}

}  // namespace mkdv::fft
