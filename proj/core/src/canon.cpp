#include "copoly/canon.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "copoly/error.hpp"

namespace copoly {

namespace {

// Symmetric weight matrix with per-vertex labels; simple graphs use 0/1
// weights and no labels, multigraphs use multiplicities and loop counts.
struct WeightedView {
    int n = 0;
    std::vector<std::uint32_t> w;
    std::vector<std::uint32_t> label;

    std::uint32_t at(int u, int v) const { return w[static_cast<std::size_t>(u * n + v)]; }
};

// Colour refinement until stable. Colours are ranks of sorted signatures, so
// they depend only on the isomorphism class.
std::vector<int> refine(const WeightedView& g) {
    using Signature = std::pair<int, std::vector<std::pair<int, std::uint32_t>>>;
    const auto n = static_cast<std::size_t>(g.n);
    std::vector<int> color(n, 0);
    {
        std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> sig(n);
        for (int v = 0; v < g.n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.first = g.label[static_cast<std::size_t>(v)];
            for (int u = 0; u < g.n; ++u) {
                if (u != v && g.at(v, u) != 0) s.second.push_back(g.at(v, u));
            }
            std::sort(s.second.begin(), s.second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < n; ++v) {
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        }
    }
    int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    for (;;) {
        std::vector<Signature> sig(n);
        for (int v = 0; v < g.n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.first = color[static_cast<std::size_t>(v)];
            for (int u = 0; u < g.n; ++u) {
                if (u != v && g.at(v, u) != 0) s.second.emplace_back(color[static_cast<std::size_t>(u)], g.at(v, u));
            }
            std::sort(s.second.begin(), s.second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        const int next_classes = static_cast<int>(sorted.size());
        for (std::size_t v = 0; v < n; ++v) {
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        }
        if (next_classes == classes) break;
        classes = next_classes;
    }
    return color;
}

// u and v are twins when swapping them is an automorphism.
bool twins(const WeightedView& g, int u, int v) {
    if (g.label[static_cast<std::size_t>(u)] != g.label[static_cast<std::size_t>(v)]) return false;
    for (int x = 0; x < g.n; ++x) {
        if (x != u && x != v && g.at(u, x) != g.at(v, x)) return false;
    }
    return true;
}

class CanonSearch {
public:
    explicit CanonSearch(const WeightedView& g) : g_(g) {
        const auto n = static_cast<std::size_t>(g.n);
        color_ = refine(g);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return color_[static_cast<std::size_t>(a)] < color_[static_cast<std::size_t>(b)]; });
        cell_at_.resize(n);
        for (std::size_t p = 0; p < n; ++p) cell_at_[p] = color_[static_cast<std::size_t>(order[p])];

        twin_class_.assign(n, -1);
        for (int v = 0; v < g.n; ++v) {
            if (twin_class_[static_cast<std::size_t>(v)] != -1) continue;
            twin_class_[static_cast<std::size_t>(v)] = v;
            for (int u = v + 1; u < g.n; ++u) {
                if (twin_class_[static_cast<std::size_t>(u)] == -1 &&
                    color_[static_cast<std::size_t>(u)] == color_[static_cast<std::size_t>(v)] && twins(g, v, u)) {
                    twin_class_[static_cast<std::size_t>(u)] = v;
                }
            }
        }

        header_.push_back(static_cast<std::uint32_t>(g.n));
        for (std::size_t p = 0; p < n; ++p) {
            header_.push_back(g.label[static_cast<std::size_t>(order[p])]);
        }
        perm_.assign(n, -1);
        used_.assign(n, false);
    }

    void run() {
        current_.clear();
        search(0, false);
    }

    std::vector<std::uint32_t> key() const {
        std::vector<std::uint32_t> out = header_;
        out.insert(out.end(), best_.begin(), best_.end());
        return out;
    }

    const std::vector<int>& order() const { return best_perm_; }

private:
    // `below` is true once the current prefix is already smaller than best.
    void search(int pos, bool below) {
        if (pos == g_.n) {
            if (!have_best_ || below) {
                best_ = current_;
                best_perm_ = perm_;
                have_best_ = true;
            }
            return;
        }
        const int cell = cell_at_[static_cast<std::size_t>(pos)];
        const std::size_t start = current_.size();
        for (int v = 0; v < g_.n; ++v) {
            const auto sv = static_cast<std::size_t>(v);
            if (used_[sv] || color_[sv] != cell) continue;
            if (!first_unused_twin(v)) continue;

            bool now_below = below;
            bool pruned = false;
            for (int j = 0; j < pos; ++j) {
                const std::uint32_t word = g_.at(perm_[static_cast<std::size_t>(j)], v);
                const std::size_t idx = current_.size();
                current_.push_back(word);
                if (have_best_ && !now_below) {
                    if (word > best_[idx]) {
                        pruned = true;
                        break;
                    }
                    if (word < best_[idx]) now_below = true;
                }
            }
            if (!pruned) {
                used_[sv] = true;
                perm_[static_cast<std::size_t>(pos)] = v;
                search(pos + 1, now_below);
                used_[sv] = false;
            }
            current_.resize(start);
            // A strictly smaller best found below this branch tightens later siblings.
            if (below) below = false;
        }
    }

    bool first_unused_twin(int v) const {
        const int cls = twin_class_[static_cast<std::size_t>(v)];
        for (int u = 0; u < v; ++u) {
            if (!used_[static_cast<std::size_t>(u)] && twin_class_[static_cast<std::size_t>(u)] == cls) return false;
        }
        return true;
    }

    const WeightedView& g_;
    std::vector<int> color_;
    std::vector<int> cell_at_;
    std::vector<int> twin_class_;
    std::vector<std::uint32_t> header_;
    std::vector<std::uint32_t> current_;
    std::vector<std::uint32_t> best_;
    std::vector<int> perm_;
    std::vector<int> best_perm_;
    std::vector<bool> used_;
    bool have_best_ = false;
};

void check_canon_order(int n) {
    if (n > kMaxCanonOrder) {
        throw CapacityError("canonical labeling limited to n <= " + std::to_string(kMaxCanonOrder) +
                            ", got " + std::to_string(n));
    }
}

WeightedView view_of(const SimpleGraph& g) {
    WeightedView view;
    view.n = g.order();
    view.w.assign(static_cast<std::size_t>(view.n * view.n), 0);
    view.label.assign(static_cast<std::size_t>(view.n), 0);
    for (const Edge& e : g.edges()) {
        view.w[static_cast<std::size_t>(e.u * view.n + e.v)] = 1;
        view.w[static_cast<std::size_t>(e.v * view.n + e.u)] = 1;
    }
    return view;
}

}  // namespace

std::vector<int> canonical_order(const SimpleGraph& g) {
    check_canon_order(g.order());
    const WeightedView view = view_of(g);
    CanonSearch search(view);
    search.run();
    return search.order();
}

CanonKey canonical_key(const SimpleGraph& g) {
    check_canon_order(g.order());
    const WeightedView view = view_of(g);
    CanonSearch search(view);
    search.run();
    const std::vector<std::uint32_t> words = search.key();
    CanonKey key;
    key.n = static_cast<std::uint8_t>(g.order());
    // header: order followed by n labels (all zero)
    for (std::size_t i = 1 + static_cast<std::size_t>(g.order()); i < words.size(); ++i) {
        key.bits = (key.bits << 1) | words[i];
    }
    return key;
}

MultiCanonKey canonical_key(const MultiGraph& g) {
    check_canon_order(g.order());
    WeightedView view;
    view.n = g.order();
    view.w.resize(static_cast<std::size_t>(view.n * view.n));
    view.label.resize(static_cast<std::size_t>(view.n));
    for (int u = 0; u < view.n; ++u) {
        view.label[static_cast<std::size_t>(u)] = g.loops(u);
        for (int v = 0; v < view.n; ++v) {
            view.w[static_cast<std::size_t>(u * view.n + v)] = u == v ? 0 : g.multiplicity(u, v);
        }
    }
    CanonSearch search(view);
    search.run();
    return MultiCanonKey{search.key()};
}

SimpleGraph graph_from_key(const CanonKey& key) {
    const int n = key.n;
    SimpleGraph g(n);
    int remaining = n * (n - 1) / 2;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            --remaining;
            if ((key.bits >> remaining) & 1u) g.add_edge(j, i);
        }
    }
    return g;
}

}  // namespace copoly
