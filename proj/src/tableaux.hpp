#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace macvv {

struct Box {
    int row = 0; // 1-based
    int col = 0; // 1-based
    auto operator<=>(const Box&) const = default;
};

// Content grading of a box; increases along rows, decreases down columns.
inline int content(const Box& b) { return b.col - b.row; }

// Young diagram in English notation: weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return (int)parts_.size(); }
    int part(int r) const { return r >= 1 && r <= rows() ? parts_[r - 1] : 0; } // 1-based
    int box_count() const;
    int col_height(int c) const;
    bool contains(const Box& b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }
    std::vector<Box> boxes_row_major() const;
    // Boxes listed down successive columns, leftmost column first.
    std::vector<Box> boxes_column_standard() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
    std::string str() const;

  private:
    std::vector<int> parts_;
};

// n_lambda, the smallest valid extension rank.
inline int min_rank(const Partition& base) {
    return base.box_count() + (base.rows() ? base.parts()[0] : 0);
}

// The padded diagram (n - |base|, base_1, ..., base_r).
Partition extended_shape(const Partition& base, int n);

enum class FillingKind { RYT, RSSYT };

// Non-negative integer labelling of a diagram.
class Filling {
  public:
    Filling() = default;
    Filling(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(const Box& b) const { return rows_[b.row - 1][b.col - 1]; }
    int degree() const;

    bool is_ryt() const;   // weakly decreasing along rows and columns
    bool is_rssyt() const; // additionally strictly decreasing down columns
    static Filling zero(const Partition& shape);

    bool operator==(const Filling&) const = default;
    auto operator<=>(const Filling&) const = default;
    std::string str() const;

  private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

// Label j*q^b of a periodic tableau. Order: j*q^m < k*q^l iff m > l, or
// m = l and j < k.
struct PLabel {
    int index = 0;
    int power = 0;
    // Structural order for container keys only; the label order is label_less.
    auto operator<=>(const PLabel&) const = default;
};

inline bool label_less(const PLabel& a, const PLabel& b) {
    if (a.power != b.power) return a.power > b.power;
    return a.index < b.index;
}

// Standard Young tableau as rows of labels 1..n.
using Syt = std::vector<std::vector<int>>;

// Periodic standard Young tableau: each index 1..n once, labels strictly
// increasing along rows and columns in the PLabel order.
class Psyt {
  public:
    Psyt() = default;
    Psyt(Partition shape, std::vector<std::vector<PLabel>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<PLabel>>& rows() const { return rows_; }
    int size() const { return n_; }
    const PLabel& at(const Box& b) const { return rows_[b.row - 1][b.col - 1]; }

    Box box_of_index(int i) const { return index_box_[i - 1]; }
    int power_of_index(int i) const { return at(box_of_index(i)).power; } // w_tau(i)
    int content_of_index(int i) const { return content(box_of_index(i)); } // c_tau(i)
    int power_sum() const;

    Filling power_filling() const; // the power-forgetting map to RYT
    bool is_syt() const;           // all powers zero
    Syt to_syt() const;            // valid only when is_syt()

    bool operator==(const Psyt&) const = default;
    auto operator<=>(const Psyt&) const = default;
    std::string str() const;

    static Psyt from_syt(const Partition& shape, const Syt& s);

  private:
    Partition shape_;
    std::vector<std::vector<PLabel>> rows_;
    std::vector<Box> index_box_;
    int n_ = 0;
};

// All elements of PSYT(shape; T), enumerated in lexicographic order of the
// vector (row-major position of index 1, of index 2, ...).
std::vector<Psyt> enumerate_psyt(const Partition& shape, const Filling& T);

// The affine rotation: index k >= 2 becomes k-1 keeping its power, index 1
// becomes n with power+1. psi_inv requires index n to carry power >= 1.
Psyt psi(const Psyt& tau);
Psyt psi_inv(const Psyt& tau);
Psyt psi_pow(const Psyt& tau, int r);

// Swap of indices i, i+1 keeping box powers, when the result is a PSYT.
std::optional<Psyt> si_move(const Psyt& tau, int i);

// Whether s_i(tau) > tau is a cover: the swap is valid and either
// w_tau(i) < w_tau(i+1), or the powers agree and c_tau(i) - c_tau(i+1) > 1.
bool cover_up(const Psyt& tau, int i);

// Whether tau > s_i(tau), i.e. s_i(tau) exists and tau covers it.
bool cover_down(const Psyt& tau, int i);

// The decomposition of an RYT into a standard tableau and a decreasing vector,
// plus the b statistic and the stabilizer composition of Min(T).
struct FillingStats {
    Syt s;                // S(T)
    std::vector<int> nu;  // values of T in decreasing order
    long b = 0;           // sum of nu_i (c_{S(T)}(i) + i - 1)
    std::vector<int> mu;  // composition from same-row equal-power runs of Min(T)
};
FillingStats stats(const Partition& shape, const Filling& T);

// Unique minimum and maximum of PSYT(shape; T). Computed by closed form and
// certified against the cover relations; falls back to exhaustive search if
// the certificate ever fails.
std::pair<Psyt, Psyt> min_top(const Partition& shape, const Filling& T);
Psyt min_of(const Partition& shape, const Filling& T);
Psyt top_of(const Partition& shape, const Filling& T);

// Inversion pairs of tau: boxes with S(T)(b1) < S(T)(b2) but index(b1) >
// index(b2), ordered by (S(b1), S(b2)).
std::vector<std::pair<Box, Box>> inversions(const Psyt& tau);
inline std::size_t inversion_count(const Psyt& tau) { return inversions(tau).size(); }

// All fillings of the given kind with entry sum equal to degree.
std::vector<Filling> enumerate_fillings(const Partition& shape, int degree, FillingKind kind);

// All standard Young tableaux of the shape, in deterministic order.
std::vector<Syt> enumerate_syt(const Partition& shape);

// Labels S(T)(box) as positions in the two-key order (T decreasing, then
// column-standard); returned as a row-shaped table.
Syt s_tableau(const Partition& shape, const Filling& T);

int content_of_label(const Syt& s, int label);
Box box_of_label(const Syt& s, int label);

} // namespace macvv
