#include "tableaux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace macvv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::box_count() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
}

int Partition::col_height(int c) const {
    int h = 0;
    for (int p : parts_)
        if (p >= c) ++h;
    return h;
}

std::vector<Box> Partition::boxes_row_major() const {
    std::vector<Box> out;
    out.reserve(box_count());
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= part(r); ++c) out.push_back(Box{r, c});
    return out;
}

std::vector<Box> Partition::boxes_column_standard() const {
    std::vector<Box> out;
    out.reserve(box_count());
    const int width = rows() ? parts_[0] : 0;
    for (int c = 1; c <= width; ++c)
        for (int r = 1; r <= col_height(c); ++r) out.push_back(Box{r, c});
    return out;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition extended_shape(const Partition& base, int n) {
    if (n < min_rank(base)) throw std::invalid_argument("extended_shape: rank below n_lambda");
    if (n == 0) return Partition();
    std::vector<int> parts;
    parts.push_back(n - base.box_count());
    for (int p : base.parts()) parts.push_back(p);
    return Partition(std::move(parts));
}

Filling::Filling(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if ((int)rows_.size() != shape_.rows()) throw std::invalid_argument("Filling: row count mismatch");
    for (int r = 1; r <= shape_.rows(); ++r) {
        if ((int)rows_[r - 1].size() != shape_.part(r))
            throw std::invalid_argument("Filling: row length mismatch");
        for (int v : rows_[r - 1])
            if (v < 0) throw std::invalid_argument("Filling: negative value");
    }
}

int Filling::degree() const {
    int d = 0;
    for (auto& row : rows_)
        for (int v : row) d += v;
    return d;
}

bool Filling::is_ryt() const {
    for (int r = 1; r <= shape_.rows(); ++r)
        for (int c = 1; c <= shape_.part(r); ++c) {
            if (c > 1 && at({r, c - 1}) < at({r, c})) return false;
            if (r > 1 && shape_.contains({r - 1, c}) && at({r - 1, c}) < at({r, c})) return false;
        }
    return true;
}

bool Filling::is_rssyt() const {
    if (!is_ryt()) return false;
    for (int r = 2; r <= shape_.rows(); ++r)
        for (int c = 1; c <= shape_.part(r); ++c)
            if (at({r - 1, c}) <= at({r, c})) return false;
    return true;
}

Filling Filling::zero(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= shape.rows(); ++r) rows.emplace_back(shape.part(r), 0);
    return Filling(shape, std::move(rows));
}

std::string Filling::str() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += ",";
        s += "[";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) s += ",";
            s += std::to_string(rows_[r][c]);
        }
        s += "]";
    }
    return s + "]";
}

Psyt::Psyt(Partition shape, std::vector<std::vector<PLabel>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    n_ = shape_.box_count();
    if ((int)rows_.size() != shape_.rows()) throw std::invalid_argument("Psyt: row count mismatch");
    index_box_.assign(n_, Box{});
    std::vector<bool> seen(n_, false);
    for (int r = 1; r <= shape_.rows(); ++r) {
        if ((int)rows_[r - 1].size() != shape_.part(r))
            throw std::invalid_argument("Psyt: row length mismatch");
        for (int c = 1; c <= shape_.part(r); ++c) {
            const PLabel& l = at({r, c});
            if (l.index < 1 || l.index > n_ || l.power < 0)
                throw std::invalid_argument("Psyt: label out of range");
            if (seen[l.index - 1]) throw std::invalid_argument("Psyt: repeated index");
            seen[l.index - 1] = true;
            index_box_[l.index - 1] = Box{r, c};
            if (c > 1 && !label_less(at({r, c - 1}), l))
                throw std::invalid_argument("Psyt: row not increasing");
            if (r > 1 && shape_.contains({r - 1, c}) && !label_less(at({r - 1, c}), l))
                throw std::invalid_argument("Psyt: column not increasing");
        }
    }
}

int Psyt::power_sum() const {
    int s = 0;
    for (auto& row : rows_)
        for (auto& l : row) s += l.power;
    return s;
}

Filling Psyt::power_filling() const {
    std::vector<std::vector<int>> rows;
    for (auto& row : rows_) {
        rows.emplace_back();
        for (auto& l : row) rows.back().push_back(l.power);
    }
    return Filling(shape_, std::move(rows));
}

bool Psyt::is_syt() const {
    for (auto& row : rows_)
        for (auto& l : row)
            if (l.power != 0) return false;
    return true;
}

Syt Psyt::to_syt() const {
    if (!is_syt()) throw std::domain_error("Psyt::to_syt: nonzero powers");
    Syt s;
    for (auto& row : rows_) {
        s.emplace_back();
        for (auto& l : row) s.back().push_back(l.index);
    }
    return s;
}

Psyt Psyt::from_syt(const Partition& shape, const Syt& s) {
    std::vector<std::vector<PLabel>> rows;
    for (auto& row : s) {
        rows.emplace_back();
        for (int v : row) rows.back().push_back(PLabel{v, 0});
    }
    return Psyt(shape, std::move(rows));
}

std::string Psyt::str() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += ",";
        s += "[";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) s += ",";
            s += std::to_string(rows_[r][c].index) + "q^" + std::to_string(rows_[r][c].power);
        }
        s += "]";
    }
    return s + "]";
}

std::vector<Psyt> enumerate_psyt(const Partition& shape, const Filling& T) {
    if (T.shape() != shape || !T.is_ryt())
        throw std::invalid_argument("enumerate_psyt: filling is not an RYT on the shape");
    const auto boxes = shape.boxes_row_major();
    const int n = (int)boxes.size();
    std::vector<Psyt> out;
    if (n == 0) {
        out.emplace_back(shape, std::vector<std::vector<PLabel>>{});
        return out;
    }
    std::vector<int> assigned(n, 0); // row-major box pos -> index (0 = empty)
    std::map<Box, int> pos_of;
    for (int p = 0; p < n; ++p) pos_of[boxes[p]] = p;

    // A box may receive the next index once its equal-power left/up neighbours
    // are filled; cross-power adjacencies never constrain index order.
    auto available = [&](int p) {
        if (assigned[p]) return false;
        const Box b = boxes[p];
        const int pw = T.at(b);
        Box left{b.row, b.col - 1}, up{b.row - 1, b.col};
        if (b.col > 1 && T.at(left) == pw && !assigned[pos_of[left]]) return false;
        if (b.row > 1 && shape.contains(up) && T.at(up) == pw && !assigned[pos_of[up]]) return false;
        return true;
    };

    auto emit = [&]() {
        std::vector<std::vector<PLabel>> rows;
        int p = 0;
        for (int r = 1; r <= shape.rows(); ++r) {
            rows.emplace_back();
            for (int c = 1; c <= shape.part(r); ++c, ++p)
                rows.back().push_back(PLabel{assigned[p], T.at(boxes[p])});
        }
        out.emplace_back(shape, std::move(rows));
    };

    auto rec = [&](auto&& self, int next_index) -> void {
        if (next_index > n) {
            emit();
            return;
        }
        for (int p = 0; p < n; ++p) {
            if (!available(p)) continue;
            assigned[p] = next_index;
            self(self, next_index + 1);
            assigned[p] = 0;
        }
    };
    rec(rec, 1);
    return out;
}

Psyt psi(const Psyt& tau) {
    const int n = tau.size();
    auto rows = tau.rows();
    for (auto& row : rows)
        for (auto& l : row) {
            if (l.index >= 2)
                l.index -= 1;
            else {
                l.index = n;
                l.power += 1;
            }
        }
    return Psyt(tau.shape(), std::move(rows));
}

Psyt psi_inv(const Psyt& tau) {
    const int n = tau.size();
    if (tau.power_of_index(n) < 1)
        throw std::domain_error("psi_inv: index n has power 0, not invertible");
    auto rows = tau.rows();
    for (auto& row : rows)
        for (auto& l : row) {
            if (l.index == n) {
                l.index = 1;
                l.power -= 1;
            } else {
                l.index += 1;
            }
        }
    return Psyt(tau.shape(), std::move(rows));
}

Psyt psi_pow(const Psyt& tau, int r) {
    Psyt out = tau;
    for (int k = 0; k < r; ++k) out = psi(out);
    for (int k = 0; k > r; --k) out = psi_inv(out);
    return out;
}

std::optional<Psyt> si_move(const Psyt& tau, int i) {
    if (i < 1 || i >= tau.size()) throw std::invalid_argument("si_move: generator out of range");
    auto rows = tau.rows();
    const Box b1 = tau.box_of_index(i), b2 = tau.box_of_index(i + 1);
    rows[b1.row - 1][b1.col - 1].index = i + 1;
    rows[b2.row - 1][b2.col - 1].index = i;
    try {
        return Psyt(tau.shape(), std::move(rows));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

bool cover_up(const Psyt& tau, int i) {
    const int wi = tau.power_of_index(i), wi1 = tau.power_of_index(i + 1);
    bool cond = wi < wi1 ||
                (wi == wi1 && tau.content_of_index(i) - tau.content_of_index(i + 1) > 1);
    if (!cond) return false;
    return si_move(tau, i).has_value();
}

bool cover_down(const Psyt& tau, int i) {
    auto s = si_move(tau, i);
    return s && cover_up(*s, i);
}

Syt s_tableau(const Partition& shape, const Filling& T) {
    auto cs = shape.boxes_column_standard();
    std::map<Box, int> cs_pos;
    for (int p = 0; p < (int)cs.size(); ++p) cs_pos[cs[p]] = p;
    auto boxes = shape.boxes_row_major();
    std::stable_sort(boxes.begin(), boxes.end(), [&](const Box& a, const Box& b) {
        if (T.at(a) != T.at(b)) return T.at(a) > T.at(b);
        return cs_pos[a] < cs_pos[b];
    });
    Syt s;
    for (int r = 1; r <= shape.rows(); ++r) s.emplace_back(shape.part(r), 0);
    for (int p = 0; p < (int)boxes.size(); ++p) s[boxes[p].row - 1][boxes[p].col - 1] = p + 1;
    return s;
}

Box box_of_label(const Syt& s, int label) {
    for (int r = 0; r < (int)s.size(); ++r)
        for (int c = 0; c < (int)s[r].size(); ++c)
            if (s[r][c] == label) return Box{r + 1, c + 1};
    throw std::invalid_argument("box_of_label: label not present");
}

int content_of_label(const Syt& s, int label) { return content(box_of_label(s, label)); }

namespace {

Psyt min_closed_form(const Partition& shape, const Filling& T) {
    auto boxes = shape.boxes_row_major();
    std::stable_sort(boxes.begin(), boxes.end(), [&](const Box& a, const Box& b) {
        if (T.at(a) != T.at(b)) return T.at(a) < T.at(b);
        return a < b; // row-major tie break
    });
    std::vector<std::vector<PLabel>> rows;
    for (int r = 1; r <= shape.rows(); ++r) rows.emplace_back(shape.part(r), PLabel{});
    for (int p = 0; p < (int)boxes.size(); ++p)
        rows[boxes[p].row - 1][boxes[p].col - 1] = PLabel{p + 1, T.at(boxes[p])};
    return Psyt(shape, std::move(rows));
}

Psyt top_closed_form(const Partition& shape, const Filling& T) {
    const Syt s = s_tableau(shape, T);
    std::vector<std::vector<PLabel>> rows;
    for (int r = 1; r <= shape.rows(); ++r) {
        rows.emplace_back();
        for (int c = 1; c <= shape.part(r); ++c)
            rows.back().push_back(PLabel{s[r - 1][c - 1], T.at({r, c})});
    }
    return Psyt(shape, std::move(rows));
}

bool is_local_max(const Psyt& tau) {
    for (int i = 1; i < tau.size(); ++i)
        if (cover_up(tau, i)) return false;
    return true;
}

bool is_local_min(const Psyt& tau) {
    for (int i = 1; i < tau.size(); ++i)
        if (cover_down(tau, i)) return false;
    return true;
}

} // namespace

std::pair<Psyt, Psyt> min_top(const Partition& shape, const Filling& T) {
    if (T.shape() != shape || !T.is_ryt())
        throw std::invalid_argument("min_top: filling is not an RYT on the shape");
    Psyt mn = min_closed_form(shape, T);
    Psyt tp = top_closed_form(shape, T);
    if (is_local_min(mn) && is_local_max(tp)) return {mn, tp};
    // Certificate failed: search the whole class for the unique extrema.
    auto all = enumerate_psyt(shape, T);
    std::optional<Psyt> mn2, tp2;
    for (auto& tau : all) {
        if (is_local_min(tau)) {
            if (mn2) throw std::logic_error("min_top: minimum not unique");
            mn2 = tau;
        }
        if (is_local_max(tau)) {
            if (tp2) throw std::logic_error("min_top: maximum not unique");
            tp2 = tau;
        }
    }
    if (!mn2 || !tp2) throw std::logic_error("min_top: extremum not found");
    return {*mn2, *tp2};
}

Psyt min_of(const Partition& shape, const Filling& T) { return min_top(shape, T).first; }
Psyt top_of(const Partition& shape, const Filling& T) { return min_top(shape, T).second; }

FillingStats stats(const Partition& shape, const Filling& T) {
    if (T.shape() != shape || !T.is_ryt())
        throw std::invalid_argument("stats: filling is not an RYT on the shape");
    FillingStats st;
    st.s = s_tableau(shape, T);
    for (auto& row : T.rows())
        for (int v : row) st.nu.push_back(v);
    std::sort(st.nu.begin(), st.nu.end(), std::greater<int>());
    for (int i = 1; i <= (int)st.nu.size(); ++i)
        st.b += (long)st.nu[i - 1] * (content_of_label(st.s, i) + i - 1);

    // Stabilizer composition: consecutive indices in the same row of Min(T)
    // carrying equal powers (exactly the swaps that fail to move Min).
    const Psyt mn = min_of(shape, T);
    const int n = shape.box_count();
    int run = n ? 1 : 0;
    for (int i = 1; i < n; ++i) {
        const Box a = mn.box_of_index(i), b = mn.box_of_index(i + 1);
        if (a.row == b.row && mn.power_of_index(i) == mn.power_of_index(i + 1)) {
            ++run;
        } else {
            st.mu.push_back(run);
            run = 1;
        }
    }
    if (run) st.mu.push_back(run);
    return st;
}

std::vector<std::pair<Box, Box>> inversions(const Psyt& tau) {
    const Filling T = tau.power_filling();
    const Syt s = s_tableau(tau.shape(), T);
    const int n = tau.size();
    std::vector<Box> by_s(n); // box with S-label p+1 at position p
    for (int p = 0; p < n; ++p) by_s[p] = box_of_label(s, p + 1);
    std::vector<std::pair<Box, Box>> out;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (tau.at(by_s[p]).index > tau.at(by_s[q]).index)
                out.emplace_back(by_s[p], by_s[q]);
    return out;
}

std::vector<Filling> enumerate_fillings(const Partition& shape, int degree, FillingKind kind) {
    if (degree < 0) throw std::invalid_argument("enumerate_fillings: negative degree");
    const auto boxes = shape.boxes_row_major();
    const int n = (int)boxes.size();
    std::vector<Filling> out;
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= shape.rows(); ++r) rows.emplace_back(shape.part(r), 0);
    if (n == 0) {
        if (degree == 0) out.emplace_back(shape, rows);
        return out;
    }
    auto rec = [&](auto&& self, int p, int budget) -> void {
        if (p == n) {
            if (budget == 0) out.emplace_back(shape, rows);
            return;
        }
        const Box b = boxes[p];
        int cap = budget;
        if (b.col > 1) cap = std::min(cap, rows[b.row - 1][b.col - 2]);
        if (b.row > 1 && shape.contains({b.row - 1, b.col})) {
            int up = rows[b.row - 2][b.col - 1];
            cap = std::min(cap, kind == FillingKind::RSSYT ? up - 1 : up);
        }
        for (int v = cap; v >= 0; --v) {
            rows[b.row - 1][b.col - 1] = v;
            self(self, p + 1, budget - v);
        }
        rows[b.row - 1][b.col - 1] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

std::vector<Syt> enumerate_syt(const Partition& shape) {
    std::vector<Syt> out;
    for (auto& tau : enumerate_psyt(shape, Filling::zero(shape))) out.push_back(tau.to_syt());
    return out;
}

} // namespace macvv
