#include "lefschetz/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lefschetz::schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw std::invalid_argument("partition must look like [3,1], got '" + std::string(text) + "'");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const std::string_view item = body.substr(0, comma);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(std::stoi(std::string(item)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int i) const {
    return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (other[i] > (*this)[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Box::Box(int rows_, int cols_) : rows(rows_), cols(cols_) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("box needs at least one row and one column");
}

bool Box::fits(const Partition& p) const { return p.length() <= rows && p[0] <= cols; }

Partition Box::full() const { return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols)); }

Partition Box::complement(const Partition& p) const {
    std::vector<int> parts(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) parts[static_cast<std::size_t>(i)] = cols - p[rows - 1 - i];
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_in_box(const Box& box, int size) {
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> grow = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == box.rows) return;
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            parts.push_back(p);
            grow(remaining - p, p);
            parts.pop_back();
        }
    };
    if (size >= 0) grow(size, box.cols);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Partition> pieri(const Partition& lambda, int p, const Box& box) {
    if (!box.fits(lambda)) throw std::invalid_argument("pieri: " + lambda.str() + " does not fit in the box");
    if (p < 1) throw std::invalid_argument("pieri: strip size must be positive");

    std::vector<Partition> out;
    std::vector<int> parts(static_cast<std::size_t>(box.rows), 0);
    // Row i of mu lies between lambda_i and lambda_{i-1} (interlacing).
    std::function<void(int, int)> place = [&](int row, int remaining) {
        if (row == box.rows) {
            if (remaining == 0) out.emplace_back(parts);
            return;
        }
        const int lo = lambda[row];
        const int hi = row == 0 ? box.cols : lambda[row - 1];
        for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
            parts[static_cast<std::size_t>(row)] = v;
            place(row + 1, remaining - (v - lo));
        }
        parts[static_cast<std::size_t>(row)] = 0;
    };
    place(0, p);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!nu.contains(lambda) || nu.size() != lambda.size() + mu.size()) return 0;
    if (mu.size() == 0) return 1;

    // Skew cells in reading order: rows top to bottom, each row right to left.
    struct Cell {
        int row;
        int col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < nu.length(); ++r)
        for (int c = nu[r] - 1; c >= lambda[r]; --c) cells.push_back({r, c});

    std::vector<std::vector<int>> filling(static_cast<std::size_t>(nu.length()),
                                          std::vector<int>(static_cast<std::size_t>(nu[0]), 0));
    std::vector<int> used(static_cast<std::size_t>(mu.length() + 1), 0);
    long count = 0;

    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
        if (pos == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[pos];
        int upper = mu.length();
        if (c + 1 < nu[r]) upper = std::min(upper, filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
        int lower = 1;
        if (r > 0 && c >= lambda[r - 1]) {
            lower = filling[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1;
        }
        for (int v = lower; v <= upper; ++v) {
            const auto vi = static_cast<std::size_t>(v);
            if (used[vi] == mu[v - 1]) continue;
            if (v > 1 && used[vi] + 1 > used[vi - 1]) continue;
            ++used[vi];
            filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            fill(pos + 1);
            --used[vi];
        }
        filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    };
    fill(0);
    return count;
}

std::string schubert_label(const Partition& p) { return p.length() == 0 ? "1" : "s" + p.str(); }

Algebra grassmannian(int k, int n) {
    if (k < 1 || k >= n) {
        throw std::invalid_argument("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") needs 1 <= k < n");
    }
    const Box box(k, n - k);
    const int d = k * (n - k);

    std::vector<std::vector<Partition>> classes;
    std::vector<std::vector<std::string>> basis;
    for (int m = 0; m <= d; ++m) {
        classes.push_back(partitions_in_box(box, m));
        std::vector<std::string> labels;
        for (const auto& p : classes.back()) labels.push_back(schubert_label(p));
        basis.push_back(std::move(labels));
    }

    ProductRule rule = [&](int k1, std::size_t i, int k2, std::size_t j) {
        const auto& targets = classes[static_cast<std::size_t>(k1 + k2)];
        const Partition& lambda = classes[static_cast<std::size_t>(k1)][i];
        const Partition& mu = classes[static_cast<std::size_t>(k2)][j];
        Vector out(targets.size());
        for (std::size_t t = 0; t < targets.size(); ++t) out[t] = lr_coefficient(lambda, mu, targets[t]);
        return out;
    };

    return GradedAlgebra::make("Gr-" + std::to_string(k) + "-" + std::to_string(n), basis, rule,
                               Vector{Rational(1)});
}

std::vector<Element> quotient_chern_classes(const Algebra& gr, int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("quotient_chern_classes needs 1 <= k < n");
    std::vector<Element> out;
    out.push_back(Element::unit(gr));
    for (int i = 1; i <= n - k; ++i) out.push_back(Element::named(gr, schubert_label(Partition{i})));
    return out;
}

std::vector<Element> quotient_chern_classes(int k, int n) { return quotient_chern_classes(grassmannian(k, n), k, n); }

}  // namespace lefschetz::schubert
