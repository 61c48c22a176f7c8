// Copyright 2026 The cskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cskit/beamsplitter.h"

#include <algorithm>
#include <cmath>

#include "cskit/errors.h"

namespace cskit {

BeamsplitterTable::BeamsplitterTable(double transmitivity, int cutoff)
    : transmitivity_(transmitivity), cutoff_(cutoff) {
    if (!(transmitivity >= 0.0 && transmitivity <= 1.0)) {
        throw InputError("BeamsplitterTable: transmitivity must lie in [0, 1]");
    }
    if (cutoff < 0) {
        throw InputError("BeamsplitterTable: negative cutoff");
    }
    const double c = std::sqrt(transmitivity);
    const double t = std::sqrt(1.0 - transmitivity);
    const auto dim = static_cast<std::size_t>(cutoff) + 1;
    columns_.resize(dim * dim);
    columns_[index(0, 0)] = {1.0};

    // a'^dag = c a^dag + t b^dag,  b'^dag = t a^dag - c b^dag.
    // U|k, l> = a'^dag U|k-1, l> / sqrt(k), or b'^dag U|0, l-1> / sqrt(l) when k = 0.
    for (int s = 1; s <= 2 * cutoff; ++s) {
        int lo = std::max(0, s - cutoff);
        int hi = std::min(s, cutoff);
        for (int k = lo; k <= hi; ++k) {
            int l = s - k;
            const std::vector<double> *prev;
            double ca;
            double cb;
            double scale;
            if (k > 0) {
                prev = &columns_[index(k - 1, l)];
                ca = c;
                cb = t;
                scale = 1.0 / std::sqrt(static_cast<double>(k));
            } else {
                prev = &columns_[index(0, l - 1)];
                ca = t;
                cb = -c;
                scale = 1.0 / std::sqrt(static_cast<double>(l));
            }
            std::vector<double> col(static_cast<std::size_t>(s) + 1, 0.0);
            for (int p = 0; p < s; ++p) {
                double v = (*prev)[static_cast<std::size_t>(p)];
                col[static_cast<std::size_t>(p) + 1] += ca * std::sqrt(static_cast<double>(p + 1)) * v;
                col[static_cast<std::size_t>(p)] += cb * std::sqrt(static_cast<double>(s - p)) * v;
            }
            for (auto &x : col) {
                x *= scale;
            }
            columns_[index(k, l)] = std::move(col);
        }
    }
}

Eigen::MatrixXd beamsplitter_block(double transmitivity, int total) {
    if (total < 0) {
        throw InputError("beamsplitter_block: negative photon number");
    }
    BeamsplitterTable table(transmitivity, total);
    Eigen::MatrixXd block(total + 1, total + 1);
    for (int p = 0; p <= total; ++p) {
        for (int k = 0; k <= total; ++k) {
            block(p, k) = table.element(p, k, total - k);
        }
    }
    return block;
}

Eigen::MatrixXd beamsplitter_matrix(double transmitivity, int cutoff) {
    BeamsplitterTable table(transmitivity, cutoff);
    const int dim = cutoff + 1;
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(dim * dim, dim * dim);
    for (int k = 0; k <= cutoff; ++k) {
        for (int l = 0; l <= cutoff; ++l) {
            int s = k + l;
            for (int p = std::max(0, s - cutoff); p <= std::min(s, cutoff); ++p) {
                u(p * dim + (s - p), k * dim + l) = table.element(p, k, l);
            }
        }
    }
    return u;
}

}  // namespace cskit
