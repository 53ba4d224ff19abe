// Copyright 2026 The vtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vtlab/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "vtlab/error.h"

namespace vtlab {

void SsimParams::Validate() const {
  if (window < 1 || stride < 1) {
    throw VtError(ErrorCode::kDomain, "SSIM window and stride must be positive");
  }
  if (!(dynamic_range > 0.0) || !(k1 > 0.0) || !(k2 > 0.0)) {
    throw VtError(ErrorCode::kDomain, "SSIM constants must be positive");
  }
}

namespace {

void CheckSameSize(const RgbImage& x, const RgbImage& y) {
  if (x.width() != y.width() || x.height() != y.height()) {
    throw VtError(ErrorCode::kDomain, "images differ in size");
  }
}

// Summed-area tables over luminance * 1000, exact in 64-bit integers.
class Moments {
 public:
  Moments(const RgbImage& x, const RgbImage& y)
      : w_(x.width()), h_(x.height()),
        sx_(Size()), sy_(Size()), sxx_(Size()), syy_(Size()), sxy_(Size()) {
    for (int r = 0; r < h_; ++r) {
      for (int c = 0; c < w_; ++c) {
        const int64_t a = LuminanceMilli(x.at(c, r));
        const int64_t b = LuminanceMilli(y.at(c, r));
        const size_t i = Index(c + 1, r + 1);
        const size_t up = Index(c + 1, r);
        const size_t left = Index(c, r + 1);
        const size_t diag = Index(c, r);
        sx_[i] = a + sx_[up] + sx_[left] - sx_[diag];
        sy_[i] = b + sy_[up] + sy_[left] - sy_[diag];
        sxx_[i] = a * a + sxx_[up] + sxx_[left] - sxx_[diag];
        syy_[i] = b * b + syy_[up] + syy_[left] - syy_[diag];
        sxy_[i] = a * b + sxy_[up] + sxy_[left] - sxy_[diag];
      }
    }
  }

  // SSIM index of the n x n window with top-left corner (c, r).
  double Window(int c, int r, int n, double c1, double c2) const {
    const int64_t count = int64_t{n} * n;
    const int64_t a = Box(sx_, c, r, n);
    const int64_t b = Box(sy_, c, r, n);
    const int64_t aa = Box(sxx_, c, r, n);
    const int64_t bb = Box(syy_, c, r, n);
    const int64_t ab = Box(sxy_, c, r, n);
    // Population moments, still scaled by 1000 (means) or 10^6 (variances).
    const double scale = 1000.0;
    const double mx = static_cast<double>(a) / (count * scale);
    const double my = static_cast<double>(b) / (count * scale);
    const double norm = static_cast<double>(count) * count * scale * scale;
    const double vx = static_cast<double>(count * aa - a * a) / norm;
    const double vy = static_cast<double>(count * bb - b * b) / norm;
    const double cov = static_cast<double>(count * ab - a * b) / norm;
    return ((2.0 * mx * my + c1) * (2.0 * cov + c2)) /
           ((mx * mx + my * my + c1) * (vx + vy + c2));
  }

 private:
  size_t Size() const { return static_cast<size_t>(w_ + 1) * (h_ + 1); }
  size_t Index(int c, int r) const {
    return static_cast<size_t>(r) * (w_ + 1) + c;
  }
  int64_t Box(const std::vector<int64_t>& t, int c, int r, int n) const {
    return t[Index(c + n, r + n)] - t[Index(c, r + n)] - t[Index(c + n, r)] +
           t[Index(c, r)];
  }

  int w_, h_;
  std::vector<int64_t> sx_, sy_, sxx_, syy_, sxy_;
};

double WeightedSsim(const RgbImage& x, const RgbImage& y,
                    const SsimParams& params, bool weighted) {
  params.Validate();
  CheckSameSize(x, y);
  const int n = params.window;
  if (x.width() < n || x.height() < n) {
    throw VtError(ErrorCode::kDomain, "image smaller than the SSIM window");
  }
  const Moments moments(x, y);
  const double c1 = params.c1();
  const double c2 = params.c2();
  const double cx = 0.5 * x.width();
  const double cy = 0.5 * x.height();
  const double r_max = 0.5 * std::hypot(double(x.width()), double(x.height()));
  double sum = 0.0;
  double weights = 0.0;
  for (int r = 0; r + n <= x.height(); r += params.stride) {
    for (int c = 0; c + n <= x.width(); c += params.stride) {
      double w = 1.0;
      if (weighted) {
        const double dist = std::hypot(c + 0.5 * n - cx, r + 0.5 * n - cy);
        w = std::max(params.weight_floor, 1.0 - dist / r_max);
      }
      sum += w * moments.Window(c, r, n, c1, c2);
      weights += w;
    }
  }
  return sum / weights;
}

}  // namespace

double Mse(const RgbImage& x, const RgbImage& y) {
  CheckSameSize(x, y);
  if (x.empty()) return 0.0;
  // Integer accumulation of (1000 * delta)^2 keeps the sum order-free.
  long double sum = 0.0L;
  for (int r = 0; r < x.height(); ++r) {
    for (int c = 0; c < x.width(); ++c) {
      const int64_t d = LuminanceMilli(x.at(c, r)) - LuminanceMilli(y.at(c, r));
      sum += static_cast<long double>(d * d);
    }
  }
  const long double n = static_cast<long double>(x.width()) * x.height();
  return static_cast<double>(sum / (n * 1.0e6L));
}

double Rmse(const RgbImage& x, const RgbImage& y) { return std::sqrt(Mse(x, y)); }

double Ssim(const RgbImage& x, const RgbImage& y, const SsimParams& params) {
  return WeightedSsim(x, y, params, false);
}

double Wssim(const RgbImage& x, const RgbImage& y, const SsimParams& params) {
  return WeightedSsim(x, y, params, true);
}

QualityRecord Evaluate(uint64_t frame, const RgbImage& reference,
                       const RgbImage& test, const SsimParams& params) {
  return {frame, Rmse(reference, test), Ssim(reference, test, params),
          Wssim(reference, test, params)};
}

std::vector<QualityRecord> Report(const std::vector<RgbImage>& reference,
                                  const std::vector<RgbImage>& test,
                                  const SsimParams& params) {
  if (reference.size() != test.size()) {
    throw VtError(ErrorCode::kDomain,
                  "reference has " + std::to_string(reference.size()) +
                      " frames, test has " + std::to_string(test.size()));
  }
  std::vector<QualityRecord> out;
  out.reserve(reference.size());
  for (size_t i = 0; i < reference.size(); ++i) {
    out.push_back(Evaluate(i, reference[i], test[i], params));
  }
  return out;
}

QualityRecord MeanRecord(const std::vector<QualityRecord>& records) {
  QualityRecord mean;
  if (records.empty()) return mean;
  for (const QualityRecord& r : records) {
    mean.rmse += r.rmse;
    mean.ssim += r.ssim;
    mean.wssim += r.wssim;
  }
  const double n = static_cast<double>(records.size());
  mean.rmse /= n;
  mean.ssim /= n;
  mean.wssim /= n;
  return mean;
}

void WriteReportCsv(std::ostream& out, const std::vector<QualityRecord>& records) {
  char line[128];
  out << "frame,rmse,ssim,wssim\n";
  for (const QualityRecord& r : records) {
    std::snprintf(line, sizeof(line), "%llu,%.9f,%.9f,%.9f\n",
                  static_cast<unsigned long long>(r.frame), r.rmse, r.ssim,
                  r.wssim);
    out << line;
  }
  const QualityRecord mean = MeanRecord(records);
  std::snprintf(line, sizeof(line), "mean,%.9f,%.9f,%.9f\n", mean.rmse,
                mean.ssim, mean.wssim);
  out << line;
}

}  // namespace vtlab
