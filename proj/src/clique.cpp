#include "cacodes/clique.hpp"

namespace cacodes {

namespace {

// Depth-first search that extends `current` with candidates in increasing
// order. Cliques are visited in lexicographic order and `best` is only
// replaced by strictly larger ones, which yields the lexicographic tie-break.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<std::size_t> run() {
        std::vector<std::size_t> all(g_.size());
        for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
        expand(all);
        return best_;
    }

private:
    void expand(const std::vector<std::size_t>& candidates) {
        if (current_.size() > best_.size()) best_ = current_;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (current_.size() + (candidates.size() - i) <= best_.size()) return;
            const std::size_t v = candidates[i];
            std::vector<std::size_t> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                if (g_.adjacent(v, candidates[j])) next.push_back(candidates[j]);
            }
            current_.push_back(v);
            expand(next);
            current_.pop_back();
        }
    }

    const Graph& g_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

}  // namespace cacodes
