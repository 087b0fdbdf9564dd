#pragma once

#include "shufalg/ring.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace shufalg {

enum class RootType { A, B, G };

using Word = std::vector<int>;

struct PosRoot {
    Word word;
    std::vector<int> nu;  // nu[i-1] = coefficient of alpha_i
    int height = 0;
    int index = 0;        // position in the convex order, 0-based
};

class RootSystem {
public:
    RootSystem() : RootSystem(RootType::A, 1) {}
    RootSystem(RootType kind, int n);

    static RootSystem A(int n) { return {RootType::A, n}; }
    static RootSystem B(int n) { return {RootType::B, n}; }
    static RootSystem G2() { return {RootType::G, 2}; }
    // "A3", "B2", "G2"; or type letter plus separate rank
    static RootSystem parse(const std::string& type, int n = 0);

    RootType kind() const { return kind_; }
    int rank() const { return n_; }
    std::string name() const;
    int a(int i, int j) const { return cartan_[i - 1][j - 1]; }
    int d(int i) const { return d_[i - 1]; }
    // (alpha_i, alpha_j) = d_i a_ij
    int pairing(int i, int j) const { return d(i) * a(i, j); }
    bool adjacent(int i, int j) const { return i != j && a(i, j) != 0; }

    // positive roots in convex order
    const std::vector<PosRoot>& roots() const { return roots_; }
    const PosRoot& root(int idx) const { return roots_.at(idx); }
    int num_roots() const { return int(roots_.size()); }
    // index of a Lyndon word, or of the shorthand [i,j] / [i,n,j]; -1 if none
    int find(const Word& w) const;
    int simple(int i) const;
    // (beta, beta)/2, so that v_beta = v^{half_norm}
    int half_norm(int idx) const;
    std::string root_name(int idx) const;
    int parse_root(const std::string& s) const;

    friend bool operator==(const RootSystem& a, const RootSystem& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_;
    }

private:
    RootType kind_;
    int n_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<PosRoot> roots_;
};

std::string word_str(const Word& w);
Word parse_word(const std::string& s);

// B_n root [i,n,j] is the word i..n,n,n-1..j; this reports (i, j) or (i, 0) for [i,j]
struct BShape {
    int i = 0, j = 0;
    bool doubled = false;
};
BShape b_shape(const RootSystem& rs, int idx);

int kappa(const RootSystem& rs, int idx);
ULaurent c_beta(const RootSystem& rs, int idx);
ULaurent c_tilde_beta(const RootSystem& rs, int idx);

using Grading = std::vector<int>;

struct KostantPartition {
    std::vector<int> d;  // indexed by root index
    friend bool operator==(const KostantPartition&, const KostantPartition&) = default;
};

Grading grading_of(const RootSystem& rs, const KostantPartition& kp);
// order of the convex-order lexicographic comparison
bool kp_less(const KostantPartition& a, const KostantPartition& b);
std::vector<KostantPartition> kostant_partitions(const RootSystem& rs, const Grading& k);
KostantPartition single_root_partition(const RootSystem& rs, int idx, int mult = 1);
int kp_size(const KostantPartition& kp);

std::string kp_str(const RootSystem& rs, const KostantPartition& kp);
KostantPartition parse_kp(const RootSystem& rs, const std::string& json);

struct PBWDIndex {
    std::map<std::pair<int, int>, int> h;  // (root index, s) -> multiplicity

    KostantPartition degree(const RootSystem& rs) const;
    Grading grading(const RootSystem& rs) const;
    // nondecreasing exponents of root idx
    std::vector<int> lambda(int idx) const;
    friend bool operator==(const PBWDIndex&, const PBWDIndex&) = default;
};

std::vector<PBWDIndex> pbwd_indices(const RootSystem& rs, const Grading& k, int lo, int hi);
std::vector<PBWDIndex> pbwd_indices(const RootSystem& rs, const KostantPartition& d, int lo, int hi);
std::string pbwd_str(const RootSystem& rs, const PBWDIndex& h);

}  // namespace shufalg
