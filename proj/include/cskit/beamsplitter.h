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

#ifndef CSKIT_BEAMSPLITTER_H
#define CSKIT_BEAMSPLITTER_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace cskit {

/// Matrix elements <p, s-p| U |k, l> of the two-mode beamsplitter for all
/// input photon numbers k, l <= cutoff.
///
/// U conserves s = k + l, so column (k, l) lives in the (s+1)-dimensional
/// sector of total photon number s. Columns are generated exactly by
/// applying the transformed creation operators to the vacuum one photon at a
/// time; all entries are real.
class BeamsplitterTable {
   public:
    BeamsplitterTable(double transmitivity, int cutoff);

    int cutoff() const {
        return cutoff_;
    }
    double transmitivity() const {
        return transmitivity_;
    }
    /// <p, k+l-p| U |k, l>, for 0 <= p <= k + l.
    double element(int p, int k, int l) const {
        return columns_[index(k, l)][static_cast<std::size_t>(p)];
    }
    const std::vector<double> &column(int k, int l) const {
        return columns_[index(k, l)];
    }

   private:
    std::size_t index(int k, int l) const {
        return static_cast<std::size_t>(k) * static_cast<std::size_t>(cutoff_ + 1) + static_cast<std::size_t>(l);
    }

    double transmitivity_;
    int cutoff_;
    std::vector<std::vector<double>> columns_;
};

/// Full unitary of the sector with `total` photons, indexed [p][k] for
/// output |p, total-p> and input |k, total-k>.
Eigen::MatrixXd beamsplitter_block(double transmitivity, int total);

/// Truncated two-mode matrix over (cutoff+1)^2 basis states, index a*(cutoff+1)+b.
Eigen::MatrixXd beamsplitter_matrix(double transmitivity, int cutoff);

}  // namespace cskit

#endif
