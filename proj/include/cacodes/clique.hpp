#pragma once

#include <cstddef>
#include <vector>

namespace cacodes {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    explicit Graph(std::size_t n) : n_(n), adj_(n * n, false) {}

    std::size_t size() const noexcept { return n_; }
    void add_edge(std::size_t u, std::size_t v) {
        adj_[u * n_ + v] = true;
        adj_[v * n_ + u] = true;
    }
    bool adjacent(std::size_t u, std::size_t v) const noexcept { return adj_[u * n_ + v]; }

private:
    std::size_t n_;
    std::vector<bool> adj_;
};

/// Exact maximum clique by branch and bound. Among all maximum cliques the
/// lexicographically smallest sorted vertex list is returned.
std::vector<std::size_t> maximum_clique(const Graph& g);

}  // namespace cacodes
