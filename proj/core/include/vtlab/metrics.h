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

#ifndef VTLAB_METRICS_H_
#define VTLAB_METRICS_H_

// Full-reference image quality on Rec. 601 luminance: MSE, RMSE, SSIM and a
// center-weighted SSIM.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vtlab/image.h"

namespace vtlab {

struct SsimParams {
  int window = 8;
  int stride = 1;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;
  // Lower bound of the WSSIM window weight.
  double weight_floor = 0.05;

  double c1() const { return (dynamic_range * k1) * (dynamic_range * k1); }
  double c2() const { return (dynamic_range * k2) * (dynamic_range * k2); }
  void Validate() const;
};

// Throw kDomain on dimension mismatch.
double Mse(const RgbImage& x, const RgbImage& y);
double Rmse(const RgbImage& x, const RgbImage& y);

// Mean of the per-window SSIM index over every window position at the
// configured stride. Window statistics are uniform (population) moments.
double Ssim(const RgbImage& x, const RgbImage& y, const SsimParams& params = {});

// Like Ssim, but window i contributes with weight max(floor, 1 - r_i / r_max)
// where r_i is the distance of its midpoint to the image center and r_max is
// half the image diagonal.
double Wssim(const RgbImage& x, const RgbImage& y, const SsimParams& params = {});

struct QualityRecord {
  uint64_t frame = 0;
  double rmse = 0.0;
  double ssim = 0.0;
  double wssim = 0.0;
};

// One record per frame pair. Throws kDomain when the sequences differ in
// length.
std::vector<QualityRecord> Report(const std::vector<RgbImage>& reference,
                                  const std::vector<RgbImage>& test,
                                  const SsimParams& params = {});
QualityRecord Evaluate(uint64_t frame, const RgbImage& reference,
                       const RgbImage& test, const SsimParams& params = {});
QualityRecord MeanRecord(const std::vector<QualityRecord>& records);

// Header frame,rmse,ssim,wssim, one row per record and a final "mean" row.
void WriteReportCsv(std::ostream& out, const std::vector<QualityRecord>& records);

}  // namespace vtlab

#endif  // VTLAB_METRICS_H_
