#include "lexelim/lexbfs.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace lexelim {

VertexOrdering::VertexOrdering(std::vector<Vertex> order)
    : order_(std::move(order)), pos_(order_.size(), order_.size()) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const Vertex v = order_[i];
        if (v < 0 || static_cast<std::size_t>(v) >= order_.size() || pos_[v] != order_.size()) {
            throw Error(ErrorCode::InvalidOrdering, "not a permutation at index " + std::to_string(i));
        }
        pos_[v] = i;
    }
}

VertexOrdering VertexOrdering::reversed() const {
    return VertexOrdering(std::vector<Vertex>(order_.rbegin(), order_.rend()));
}

void require_ordering_of(const Graph& g, const VertexOrdering& o) {
    if (o.size() != g.order()) {
        throw Error(ErrorCode::InvalidOrdering, "ordering has " + std::to_string(o.size()) +
                                                    " vertices, graph has " +
                                                    std::to_string(g.order()));
    }
}

namespace {

// Ordered partition of the unvisited vertices. Cells form a doubly linked
// list; members of each cell form a doubly linked list kept in increasing id
// order, so the head of the first cell is the smallest id among the
// lexicographically largest labels.
class PartitionQueue {
public:
    explicit PartitionQueue(std::size_t n)
        : next_(n, -1), prev_(n, -1), cell_of_(n, 0) {
        cells_.reserve(n + 1);
        cells_.push_back(Cell{});
        for (std::size_t v = 0; v < n; ++v) append(0, static_cast<Vertex>(v));
        first_cell_ = n > 0 ? 0 : -1;
    }

    bool empty() const { return first_cell_ < 0; }

    Vertex pop_front() {
        Vertex v = cells_[first_cell_].head;
        take(v);
        return v;
    }

    void take(Vertex v) {
        const int c = cell_of_[v];
        unlink(c, v);
        cell_of_[v] = -1;
        if (cells_[c].head < 0) drop_cell(c);
    }

    bool visited(Vertex v) const { return cell_of_[v] < 0; }

    // Moves the unvisited neighbors of `pivot` ahead of their cells. Neighbor
    // lists are sorted, so appending keeps every cell in id order.
    void refine(Vertex pivot, std::span<const Vertex> neighbors) {
        touched_.clear();
        for (Vertex w : neighbors) {
            const int c = cell_of_[w];
            if (c < 0) continue;
            if (cells_[c].split_stamp != pivot) {
                const int fresh = new_cell_before(c);
                cells_[c].split_stamp = pivot;
                cells_[c].split_into = fresh;
                touched_.push_back(c);
            }
            const int target = cells_[c].split_into;
            unlink(c, w);
            append(target, w);
        }
        for (int c : touched_) {
            if (cells_[c].head < 0) drop_cell(c);
        }
    }

private:
    struct Cell {
        Vertex head = -1;
        Vertex tail = -1;
        int prev = -1;
        int next = -1;
        Vertex split_stamp = -1;
        int split_into = -1;
    };

    void append(int c, Vertex v) {
        Cell& cell = cells_[c];
        prev_[v] = cell.tail;
        next_[v] = -1;
        if (cell.tail >= 0) next_[cell.tail] = v; else cell.head = v;
        cell.tail = v;
        cell_of_[v] = c;
    }

    void unlink(int c, Vertex v) {
        Cell& cell = cells_[c];
        if (prev_[v] >= 0) next_[prev_[v]] = next_[v]; else cell.head = next_[v];
        if (next_[v] >= 0) prev_[next_[v]] = prev_[v]; else cell.tail = prev_[v];
    }

    int new_cell_before(int c) {
        const int id = static_cast<int>(cells_.size());
        Cell fresh;
        fresh.next = c;
        fresh.prev = cells_[c].prev;
        cells_.push_back(fresh);
        if (fresh.prev >= 0) cells_[fresh.prev].next = id; else first_cell_ = id;
        cells_[c].prev = id;
        return id;
    }

    void drop_cell(int c) {
        Cell& cell = cells_[c];
        if (cell.prev >= 0) cells_[cell.prev].next = cell.next; else first_cell_ = cell.next;
        if (cell.next >= 0) cells_[cell.next].prev = cell.prev;
    }

    std::vector<Vertex> next_, prev_;
    std::vector<int> cell_of_;
    std::vector<Cell> cells_;
    std::vector<int> touched_;
    int first_cell_ = -1;
};

}  // namespace

VertexOrdering lexbfs(const Graph& g, Vertex start) {
    if (!g.contains(start)) {
        throw Error(ErrorCode::InvalidVertex, "start vertex " + std::to_string(start) + " out of range");
    }
    const std::size_t n = g.order();
    PartitionQueue queue(n);
    std::vector<Vertex> order;
    order.reserve(n);
    queue.take(start);
    Vertex v = start;
    for (;;) {
        order.push_back(v);
        queue.refine(v, g.neighbors(v));
        if (queue.empty()) break;
        v = queue.pop_front();
    }
    return VertexOrdering(std::move(order));
}

namespace {

// Dynamic bitset rows of the graph relabeled by ordering position.
struct PositionRows {
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    PositionRows(const Graph& g, const VertexOrdering& o) {
        const std::size_t n = g.order();
        words = (n + 63) / 64;
        bits.assign(n * words, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (Vertex w : g.neighbors(o[i])) {
                const std::size_t j = o.position(w);
                bits[i * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
            }
        }
    }

    const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }
};

// Smallest position p < limit with bit set in (x & ~y), or `limit` if none.
std::size_t first_difference(const std::uint64_t* x, const std::uint64_t* y, std::size_t limit) {
    for (std::size_t w = 0; w * 64 < limit; ++w) {
        std::uint64_t bits = x[w] & ~y[w];
        if (bits == 0) continue;
        const std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        return p < limit ? p : limit;
    }
    return limit;
}

}  // namespace

bool is_lexbfs_ordering(const Graph& g, const VertexOrdering& o) {
    require_ordering_of(g, o);
    const std::size_t n = g.order();
    if (n < 3) return true;
    PositionRows rows(g, o);
    // For b < a (positions), the earliest violating c is the first position
    // below b in N(a) \ N(b); it is rescued iff some d in N(b) \ N(a) comes
    // before it. Later c are then rescued by the same d.
    for (std::size_t a = 2; a < n; ++a) {
        for (std::size_t b = 1; b < a; ++b) {
            const std::size_t c = first_difference(rows.row(a), rows.row(b), b);
            if (c == b) continue;
            const std::size_t d = first_difference(rows.row(b), rows.row(a), c);
            if (d == c) return false;
        }
    }
    return true;
}

MoplexWitness last_vertex_moplex_witness(const Graph& g, const VertexOrdering& o) {
    require_ordering_of(g, o);
    if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is not connected");
    if (!is_lexbfs_ordering(g, o)) throw Error(ErrorCode::NotLexBFS, "ordering is not a LexBFS ordering");
    MoplexWitness w;
    if (g.empty()) {
        w.complete = true;
        return w;
    }
    const Vertex z = o.last();
    w.last = z;
    if (is_complete(g)) {
        w.complete = true;
        return w;
    }
    const VertexSet closed_z = closed_neighborhood(g, z);
    const auto blocks = components_without(g, closed_z);
    std::vector<int> block_of(g.order(), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (Vertex v : blocks[i]) block_of[v] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<NeighborEvidence> evidence;
        bool ok = true;
        for (Vertex x : g.neighbors(z)) {
            NeighborEvidence e{x, false, -1};
            for (Vertex y : g.neighbors(x)) {
                if (block_of[y] == static_cast<int>(i)) {
                    e.witness = y;
                    break;
                }
            }
            if (e.witness < 0) {
                if (closed_neighborhood(g, x) == closed_z) {
                    e.same_closed_neighborhood = true;
                } else {
                    ok = false;
                    break;
                }
            }
            evidence.push_back(e);
        }
        if (ok) {
            w.component = blocks[i];
            w.evidence = std::move(evidence);
            return w;
        }
    }
    throw Error(ErrorCode::TheoremViolation,
                "no component of G - N[z] is seen by every neighbor of z = " + std::to_string(z));
}

bool verify_moplex_witness(const Graph& g, const VertexOrdering& o, const MoplexWitness& w) {
    if (g.empty()) return w.complete;
    if (w.last != o.last()) return false;
    if (w.complete) return is_complete(g);
    const Vertex z = w.last;
    const VertexSet closed_z = closed_neighborhood(g, z);
    const auto blocks = components_without(g, closed_z);
    if (std::find(blocks.begin(), blocks.end(), w.component) == blocks.end()) return false;
    auto nz = g.neighbors(z);
    if (w.evidence.size() != nz.size()) return false;
    for (std::size_t i = 0; i < nz.size(); ++i) {
        const auto& e = w.evidence[i];
        if (e.neighbor != nz[i]) return false;
        if (e.same_closed_neighborhood) {
            if (closed_neighborhood(g, e.neighbor) != closed_z) return false;
        } else {
            if (!std::binary_search(w.component.begin(), w.component.end(), e.witness)) return false;
            if (!g.adjacent(e.neighbor, e.witness)) return false;
        }
    }
    return true;
}

std::vector<Vertex> connecting_path(const Graph& g, const VertexOrdering& o, Vertex a, Vertex b,
                                    Vertex c) {
    require_ordering_of(g, o);
    if (!g.contains(a) || !g.contains(b) || !g.contains(c)) {
        throw Error(ErrorCode::InvalidVertex, "triple vertex out of range");
    }
    if (!(o.precedes(c, b) && o.precedes(b, a)) || !g.adjacent(c, a)) {
        throw Error(ErrorCode::InvalidParameter, "triple must satisfy c < b < a and ca in E");
    }
    const Vertex z = o.last();
    std::vector<char> allowed(g.order(), 1);
    allowed[z] = 0;
    for (Vertex w : g.neighbors(z)) allowed[w] = 0;
    auto path = shortest_path(g, b, c, allowed);
    if (path.empty()) {
        throw Error(ErrorCode::LemmaViolation, "no b-c path avoiding N[z] for triple (" +
                                                   std::to_string(a) + ", " + std::to_string(b) +
                                                   ", " + std::to_string(c) + ")");
    }
    return path;
}

}  // namespace lexelim
