#pragma once

#include "shufalg/shuffle.hpp"

#include <functional>
#include <vector>

namespace shufalg {

// E_{beta,s}: left-nested v-commutators along the word, with the special nest for [1,2,1,2,2].
// exps has one entry per letter, lambdas one per bracket.
FreeElement root_vector(const ShuffleContext& ctx, int beta, const std::vector<int>& exps,
                        const std::vector<VRatFunc>& lambdas);

// admissible decomposition with all weight on the first free parameter
std::vector<int> default_tilde_decomposition(const RootSystem& rs, int beta, int s);
// letter exponents for a tilde decomposition (B: s_i..s_n for [i,n,j], s_i..s_j for [i,j];
// G2: (s1, s2) except simple roots; A: s_i..s_j)
std::vector<int> tilde_letter_exps(const RootSystem& rs, int beta, int s, const std::vector<int>& dec);

FreeElement tilde_root_vector(const ShuffleContext& ctx, int beta, int s, int sign,
                              const std::vector<int>& dec = {});
FreeElement rtt_root_vector(const ShuffleContext& ctx, int beta, int s, int sign,
                            const std::vector<int>& dec = {});

// denominator of the normalized divided power: norm^k [k]_{v_beta}!
ULaurent divided_power_denominator(const RootSystem& rs, int beta, int k);
FreeElement divided_power(const ShuffleContext& ctx, int beta, int s, int k, int sign,
                          const std::vector<int>& dec = {});

// plain-commutator nests in the rational flavor
FreeElement yangian_root_vector(const ShuffleContext& ctx, int beta, const std::vector<int>& exps);
FreeElement yangian_tilde_root_vector(const ShuffleContext& ctx, int beta, int s);
// hbar times the plain nest
FreeElement yangian_bar_root_vector(const ShuffleContext& ctx, int beta, const std::vector<int>& exps);
std::vector<int> yangian_tilde_exps(const RootSystem& rs, int beta, int s);

// (beta, s, multiplicity) -> factor placed in the ordered product
using PowerFn = std::function<FreeElement(int beta, int s, int mult)>;
using VectorFn = std::function<FreeElement(int beta, int s)>;

PowerFn powers_of(const ShuffleContext& ctx, VectorFn vec);
VectorFn tilde_choice(const ShuffleContext& ctx, int sign);
VectorFn rtt_choice(const ShuffleContext& ctx, int sign);
VectorFn yangian_tilde_choice(const ShuffleContext& ctx);
VectorFn yangian_bar_choice(const ShuffleContext& ctx);
PowerFn divided_power_choice(const ShuffleContext& ctx, int sign);

FreeElement pbwd_monomial(const ShuffleContext& ctx, const PBWDIndex& h, const PowerFn& factor);
// Psi(pbwd_monomial(...)) as a shuffle product of the factor images
ShuffleElement pbwd_image(const ShuffleContext& ctx, const PBWDIndex& h, const PowerFn& factor);
// same with plain powers of the root vectors, taken in the shuffle algebra
ShuffleElement pbwd_image(const ShuffleContext& ctx, const PBWDIndex& h, const VectorFn& vec);
// Psi of each root vector of the ordered product, repeated by multiplicity
std::vector<ShuffleElement> pbwd_factor_images(const ShuffleContext& ctx, const PBWDIndex& h, const VectorFn& vec);

}  // namespace shufalg
