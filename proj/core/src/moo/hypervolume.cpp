//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/moo/hypervolume.h"

#include <algorithm>

#include "fuelgen/util/error.h"

namespace fuelgen {

namespace {
  double slice_volume(std::vector<Objectives> pts, std::span<const double> ref) {
    const std::size_t m = ref.size();
    if (pts.empty())
      return 0;
    if (m == 1) {
      double best = ref[0];
      for (const Objectives &p: pts)
        best = std::min(best, p[0]);
      return ref[0] - best;
    }

    std::sort(pts.begin(), pts.end(),
              [m](const Objectives &a, const Objectives &b) {
                return a[m - 1] < b[m - 1];
              });
    double volume = 0;
    std::vector<Objectives> below;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      below.emplace_back(pts[i].begin(), pts[i].end() - 1);
      const double upper = i + 1 < pts.size() ? pts[i + 1][m - 1] : ref[m - 1];
      const double height = upper - pts[i][m - 1];
      if (height > 0)
        volume += height * slice_volume(below, ref.first(m - 1));
    }
    return volume;
  }
}  // namespace

double hypervolume(const std::vector<Objectives> &points,
                   std::span<const double> ref) {
  std::vector<Objectives> inside;
  for (const Objectives &p: points) {
    if (p.size() != ref.size())
      throw ShapeError("point and reference differ in dimension");
    bool ok = true;
    for (std::size_t k = 0; k < p.size(); ++k)
      ok = ok && p[k] < ref[k];
    if (ok)
      inside.push_back(p);
  }
  if (ref.empty())
    return 0;
  return slice_volume(std::move(inside), ref);
}

}  // namespace fuelgen
