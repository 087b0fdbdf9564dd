#pragma once

#include "shufalg/shuffle.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shufalg {

// w_{beta,s} and z_{beta,r}; beta is a 0-based root index, colors are 1-based
inline VarId w_variable(int beta, int s) { return wvar(beta + 1, s); }
inline VarId z_variable(int beta, int r) { return zvar(beta + 1, r); }
std::vector<VarId> w_variables(const KostantPartition& d);

// renders W/Z colors as root names, X colors as integers
ColorNamer root_namer(const RootSystem& rs);
ColorResolver root_resolver(const RootSystem& rs);

struct SpecResult {
    KostantPartition d;
    MultiLaurent poly;

    nlohmann::json to_json(const ShuffleContext& ctx) const;
    static SpecResult from_json(const ShuffleContext& ctx, const nlohmann::json& j);
    friend bool operator==(const SpecResult&, const SpecResult&) = default;
};

// x_{i,l} -> x^{(beta,s)}_{i,t}
struct SplitSlot {
    int beta = 0;
    int s = 1;
    int t = 1;
};
using VariableSplit = std::map<VarId, SplitSlot>;

// roots in convex order, then s, then t
VariableSplit canonical_split(const RootSystem& rs, const KostantPartition& d);
// canonical split precomposed with a permutation of 1..k_i for each color
VariableSplit permuted_split(const RootSystem& rs, const KostantPartition& d,
                             const std::vector<std::vector<int>>& perms);

// exponent e with x^{(beta,s)}_{i,t} -> v^e w_{beta,s}; the rational flavor uses w + (e/2) hbar
int spec_exponent(const RootSystem& rs, int beta, int i, int t);

MultiLaurent phi(const ShuffleContext& ctx, const MultiLaurent& f, const VariableSplit& split);
SpecResult phi(const KostantPartition& d, const ShuffleElement& F);
SpecResult phi(const KostantPartition& d, const ShuffleElement& F, const VariableSplit& split);
// phi_d of the shuffle product of the factors, specializing the last product term by term
SpecResult phi_of_product(const KostantPartition& d, const std::vector<ShuffleElement>& factors);

// specialization of the cross zeta factors between the groups of beta < beta2
MultiLaurent g_beta_pair_generic(const ShuffleContext& ctx, int beta, int beta2, int d1, int d2);
// tabulated for G2, generic otherwise (trigonometric)
MultiLaurent g_beta_pair(const RootSystem& rs, int beta, int beta2, int d1, int d2);
// G2 and B only
MultiLaurent g_beta(const RootSystem& rs, int beta, int d);

// rank-one product x^{l_1} * ... * x^{l_d} with v -> v_beta, in the variables w_{beta,s}
MultiLaurent p_lambda(const ShuffleContext& ctx, int beta, const std::vector<int>& lambda);

// prod G_{beta,beta'} prod c_beta^{d_beta} G_beta prod P_lambda for d = deg h (G2 and B)
MultiLaurent factorized_spec(const ShuffleContext& ctx, const PBWDIndex& h);

// B trig: <2>^{|k|} times the RTT constants of the doubled roots
ULaurent rtt_constant(const RootSystem& rs, const KostantPartition& d);
ULaurent rtt_extra_constant(const RootSystem& rs, const KostantPartition& d);
MultiLaurent b_factor(const RootSystem& rs, const KostantPartition& d);

// phi_d(F) / (A_d B_d); nullopt when the quotient is not integral
std::optional<MultiLaurent> reduced_spec(const KostantPartition& d, const ShuffleElement& F);

using VerticalSplit = std::map<int, std::vector<int>>;  // beta -> (t_{beta,1}, ..., t_{beta,l})
bool is_vertical_split(const KostantPartition& d, const VerticalSplit& t);
std::vector<VerticalSplit> vertical_splits(const KostantPartition& d);
MultiLaurent vertical_spec(const RootSystem& rs, const KostantPartition& d, const VerticalSplit& t,
                           const MultiLaurent& g);
std::optional<MultiLaurent> cross_spec(const KostantPartition& d, const VerticalSplit& t,
                                       const ShuffleElement& F);
ULaurent vertical_factorial(const RootSystem& rs, const VerticalSplit& t);

struct Verdict {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

Verdict in_bold_S(const ShuffleElement& F);
Verdict in_cal_S(const ShuffleElement& F);
Verdict is_good(const ShuffleElement& F);
Verdict is_integral_rational(const ShuffleElement& F);

// every coefficient is a polynomial in the coefficient variable divisible by its m-th power
bool hbar_divisible(const MultiLaurent& p, int m);

}  // namespace shufalg
