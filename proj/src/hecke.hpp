#pragma once

#include <map>
#include <vector>

#include "ratfun.hpp"
#include "tableaux.hpp"

namespace macvv {

// Per-shape table of standard Young tableaux with the seminormal action data
// of each generator precomputed. Tables are built once per shape and shared.
class SytTable {
  public:
    enum class GenKind { SameRow, SameCol, Swap };
    struct Gen {
        GenKind kind;
        int partner = -1; // tableau index of s_i(tau) for Swap
        RatFun diag;      // coefficient of tau in T_i(tau)
        RatFun off;       // coefficient of s_i(tau) in T_i(tau)
    };

    static const SytTable& of(const Partition& shape);

    const Partition& shape() const { return shape_; }
    int n() const { return n_; }
    int size() const { return (int)tabs_.size(); }
    const Syt& tab(int k) const { return tabs_[k]; }
    int index_of(const Syt& s) const;
    int content_of(int k, int label) const { return contents_[k][label - 1]; }
    Box box_of(int k, int label) const { return boxes_[k][label - 1]; }
    const Gen& gen(int k, int i) const { return gens_[k][i - 1]; }

  private:
    explicit SytTable(const Partition& shape);
    Partition shape_;
    int n_;
    std::vector<Syt> tabs_;
    std::map<Syt, int> index_;
    std::vector<std::vector<int>> contents_;
    std::vector<std::vector<Box>> boxes_;
    std::vector<std::vector<Gen>> gens_;
};

// Element of the seminormal module of a shape: coefficients over the SYT
// basis, zero coefficients never stored.
class SemiElt {
  public:
    SemiElt() = default;
    explicit SemiElt(Partition shape) : shape_(std::move(shape)) {}
    static SemiElt basis(const Partition& shape, int tab_index);

    const Partition& shape() const { return shape_; }
    const std::map<int, RatFun>& coords() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add(int tab, const RatFun& coeff);
    SemiElt operator+(const SemiElt& o) const;
    SemiElt operator-(const SemiElt& o) const;
    SemiElt scaled(const RatFun& c) const;
    bool operator==(const SemiElt& o) const;

  private:
    Partition shape_;
    std::map<int, RatFun> c_;
};

using HeckeWord = std::vector<int>;

SemiElt act_T(int i, const SemiElt& v);
SemiElt act_T_inv(int i, const SemiElt& v);
SemiElt act_theta_bar(int i, const SemiElt& v);
// T_{i_1} ... T_{i_r} applied with the rightmost factor acting first.
SemiElt act_word(const HeckeWord& w, const SemiElt& v);

// The module map dropping the added box of base^(n+1): tableaux carrying
// n+1 elsewhere map to zero.
SemiElt restrict_q(const Partition& base, int n, const SemiElt& v);

// Permutation helpers for the idempotent sums.
int perm_inversions(const std::vector<int>& p);
HeckeWord lex_first_reduced_word(std::vector<int> p);

} // namespace macvv
