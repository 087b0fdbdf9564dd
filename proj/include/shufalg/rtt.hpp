#pragma once

#include "shufalg/mpoly.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace shufalg {

// indices are 1-based, 1 <= i <= N = 2n+1
class RMatrixContext {
public:
    explicit RMatrixContext(int n);

    int n() const { return n_; }
    int N() const { return 2 * n_ + 1; }
    int prime(int i) const { return N() + 1 - i; }
    // 2 * bar(i)
    int bar2(int i) const { return i <= n_ ? N() - 2 * i : i == n_ + 1 ? 0 : N() + 2 - 2 * i; }
    // q^{bar i - bar j}
    VRatFunc q_bar(int i, int j) const { return VRatFunc::v(bar2(i) - bar2(j)); }
    VRatFunc q() const { return VRatFunc::v(2); }
    VRatFunc xi() const { return VRatFunc::v(2 * (2 - N())); }
    // row/column index of e_i (x) e_j
    int pair_index(int i, int j) const { return (i - 1) * N() + (j - 1); }

private:
    int n_;
};

using MatrixKey = std::pair<int, int>;

struct ConstMatrix {
    int dim = 0;
    std::map<MatrixKey, VRatFunc> entries;

    VRatFunc at(int r, int c) const;
    ConstMatrix operator*(const ConstMatrix& o) const;
    friend bool operator==(const ConstMatrix&, const ConstMatrix&) = default;
};

ConstMatrix identity_matrix(int dim);

struct PQR {
    ConstMatrix P, Q, R;
};

PQR build_PQR(const RMatrixContext& ctx);

// numerators are polynomials in uvar(); every entry shares den = (uq - q^-1)(u - xi)
struct SpectralMatrix {
    int dim = 0;
    std::map<MatrixKey, MultiLaurent> num;
    MultiLaurent den;

    ConstMatrix at(const Rational& u) const;
    // nullopt at a pole
    std::optional<std::map<MatrixKey, Rational>> eval(const Rational& u, const Rational& v) const;
};

SpectralMatrix build_Rtrig(const RMatrixContext& ctx);
SpectralMatrix build_Rtrig(const RMatrixContext& ctx, const PQR& pqr);

struct YbeTrial {
    Rational u, w1, w2, v;
    int resamples = 0;
    size_t residual_nonzeros = 0;
    Rational residual_max;
};

struct YbeReport {
    int n = 0;
    int trials = 0;
    uint64_t seed = 0;
    bool mutated = false;
    std::vector<YbeTrial> samples;
    double elapsed = 0;

    bool ok() const;
    nlohmann::json to_json() const;
};

// adds 1 to the R entry at (row, col) before assembling R(u)
struct RMutation {
    int row = 0;
    int col = 0;
};

YbeReport check_ybe(const RMatrixContext& ctx, int trials, uint64_t seed,
                    std::optional<RMutation> mutation = std::nullopt);

}  // namespace shufalg
