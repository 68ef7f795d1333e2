#pragma once

#include <algorithm>
#include <optional>
#include <vector>

namespace lexelim {

namespace detail {

// Depth-first growth of induced paths whose vertices all exceed path[0];
// a hole is reported when the path closes back to path[0] with at least four
// vertices. Requiring path[1] < last vertex reports each hole once.
template <class Callback>
bool grow_induced_paths(const Graph& g, std::vector<Vertex>& path, std::vector<char>& on_path,
                        Callback& callback) {
    const Vertex s = path.front();
    const Vertex last = path.back();
    const std::size_t k = path.size();
    for (Vertex w : g.neighbors(last)) {
        if (w <= s || on_path[w]) continue;
        bool chord = false;
        for (std::size_t i = 1; i + 1 < k; ++i) {
            if (g.adjacent(w, path[i])) {
                chord = true;
                break;
            }
        }
        if (chord) continue;
        if (k >= 2 && g.adjacent(w, s)) {
            if (k >= 3 && path[1] < w) {
                path.push_back(w);
                const bool keep_going = callback(static_cast<const std::vector<Vertex>&>(path));
                path.pop_back();
                if (!keep_going) return false;
            }
            continue;
        }
        path.push_back(w);
        on_path[w] = 1;
        const bool keep_going = grow_induced_paths(g, path, on_path, callback);
        on_path[w] = 0;
        path.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace detail

template <class Callback>
void for_each_hole(const Graph& g, Callback&& callback) {
    const std::size_t n = g.order();
    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;
    for (std::size_t s = 0; s < n; ++s) {
        path.assign(1, static_cast<Vertex>(s));
        on_path[s] = 1;
        const bool keep_going = detail::grow_induced_paths(g, path, on_path, callback);
        on_path[s] = 0;
        if (!keep_going) return;
    }
}

template <class Accept>
std::optional<std::vector<Vertex>> first_hole(const Graph& g, Accept&& accept) {
    std::optional<std::vector<Vertex>> best;
    VertexSet best_sorted;
    for_each_hole(g, [&](const std::vector<Vertex>& cycle) {
        if (!accept(cycle.size())) return true;
        VertexSet sorted(cycle.begin(), cycle.end());
        std::sort(sorted.begin(), sorted.end());
        if (!best || sorted.size() < best_sorted.size() ||
            (sorted.size() == best_sorted.size() && sorted < best_sorted)) {
            best = cycle;
            best_sorted = std::move(sorted);
        }
        return true;
    });
    return best;
}

}  // namespace lexelim
