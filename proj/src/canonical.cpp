#include <vminor/canonical.hpp>
#include <vminor/error.hpp>

#include <algorithm>
#include <array>
#include <numeric>

namespace vminor
{

namespace
{
    using Word = std::uint64_t;

    // Ordered partition of the vertices: lab lists vertices cell by cell,
    // start[p] is the first position of the cell holding position p and
    // end[s] is one past the last position of the cell starting at s.
    struct Partition
    {
        int n = 0;
        std::array<std::uint8_t, max_vertices> lab{};
        std::array<std::uint8_t, max_vertices> start{};
        std::array<std::uint8_t, max_vertices + 1> end{};
        int cells = 0;

        auto discrete() const -> bool { return cells == n; }
        auto cell_bits(int s) const -> Word
        {
            Word w = 0;
            for (int p = s; p < end[s]; ++p)
                w |= Word{1} << lab[p];
            return w;
        }
    };

    struct Searcher
    {
        int n;
        std::array<Word, max_vertices> adj{};

        bool have_best = false;
        std::array<Word, max_vertices> best_cert{};
        std::array<std::uint8_t, max_vertices> best_lab{};
        std::vector<int> best_path;
        std::array<Word, max_vertices> first_cert{};
        std::array<std::uint8_t, max_vertices> first_lab{};
        std::vector<int> first_path;

        std::vector<std::array<std::uint8_t, max_vertices>> automorphisms;
        static constexpr std::size_t max_automorphisms = 128;

        // Set by a leaf that proved an automorphism: unwind to this depth.
        int jump_to = -1;

        explicit Searcher(const Graph & g) : n(g.order())
        {
            for (int v = 0; v < n; ++v)
                adj[v] = g.neighbors(v).bits();
        }

        // Splits cells by neighbour counts into splitter cells until the
        // partition is equitable. Fragments are ordered by count, so the
        // outcome depends only on structure, never on vertex names.
        auto refine(Partition & part, std::vector<int> queue) const -> void
        {
            std::array<int, max_vertices> count{};
            std::array<std::uint8_t, max_vertices> buf{};
            std::size_t head = 0;
            while (head < queue.size() && ! part.discrete()) {
                int s = queue[head++];
                Word splitter = part.cell_bits(s);

                for (int c = 0; c < n; c = part.end[c]) {
                    int e = part.end[c];
                    if (e - c == 1)
                        continue;
                    bool uniform = true;
                    for (int p = c; p < e; ++p) {
                        count[p] = std::popcount(adj[part.lab[p]] & splitter);
                        if (count[p] != count[c])
                            uniform = false;
                    }
                    if (uniform)
                        continue;

                    std::array<int, max_vertices> order{};
                    std::iota(order.begin(), order.begin() + (e - c), c);
                    std::stable_sort(order.begin(), order.begin() + (e - c),
                            [&](int a, int b) { return count[a] < count[b]; });
                    for (int i = 0; i < e - c; ++i)
                        buf[i] = part.lab[order[i]];
                    std::array<int, max_vertices> sorted_count{};
                    for (int i = 0; i < e - c; ++i)
                        sorted_count[i] = count[order[i]];
                    for (int i = 0; i < e - c; ++i)
                        part.lab[c + i] = buf[i];

                    int frag = c;
                    for (int i = 1; i <= e - c; ++i) {
                        if (i == e - c || sorted_count[i] != sorted_count[i - 1]) {
                            int fe = c + i;
                            part.end[frag] = static_cast<std::uint8_t>(fe);
                            for (int p = frag; p < fe; ++p)
                                part.start[p] = static_cast<std::uint8_t>(frag);
                            if (frag != c) {
                                ++part.cells;
                                queue.push_back(frag);
                            }
                            frag = fe;
                        }
                    }
                    queue.push_back(c);
                }
            }
        }

        auto certificate(const Partition & part, std::array<Word, max_vertices> & cert) const -> void
        {
            std::array<std::uint8_t, max_vertices> pos{};
            for (int p = 0; p < n; ++p)
                pos[part.lab[p]] = static_cast<std::uint8_t>(p);
            for (int p = 0; p < n; ++p) {
                Word row = 0;
                for (Word rest = adj[part.lab[p]]; rest; rest &= rest - 1)
                    row |= Word{1} << pos[std::countr_zero(rest)];
                cert[p] = row;
            }
        }

        auto compare(const std::array<Word, max_vertices> & a, const std::array<Word, max_vertices> & b) const -> int
        {
            for (int p = 0; p < n; ++p)
                if (a[p] != b[p])
                    return a[p] < b[p] ? -1 : 1;
            return 0;
        }

        static auto common_prefix(const std::vector<int> & a, const std::vector<int> & b) -> int
        {
            int k = 0;
            while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k])
                ++k;
            return k;
        }

        auto record_automorphism(const Partition & leaf, const std::array<std::uint8_t, max_vertices> & target) -> void
        {
            if (automorphisms.size() >= max_automorphisms)
                return;
            std::array<std::uint8_t, max_vertices> gamma{};
            for (int p = 0; p < n; ++p)
                gamma[leaf.lab[p]] = target[p];
            automorphisms.push_back(gamma);
        }

        auto leaf(const Partition & part, const std::vector<int> & path) -> void
        {
            std::array<Word, max_vertices> cert{};
            certificate(part, cert);
            if (! have_best) {
                have_best = true;
                best_cert = first_cert = cert;
                best_lab = first_lab = part.lab;
                best_path = first_path = path;
                return;
            }
            if (compare(cert, first_cert) == 0) {
                record_automorphism(part, first_lab);
                jump_to = common_prefix(path, first_path);
                return;
            }
            int c = compare(cert, best_cert);
            if (c < 0) {
                best_cert = cert;
                best_lab = part.lab;
                best_path = path;
            }
            else if (c == 0) {
                record_automorphism(part, best_lab);
                jump_to = common_prefix(path, best_path);
            }
        }

        // Orbits of the group generated by the known automorphisms that fix
        // every vertex in `fixed`.
        auto orbits(const std::vector<int> & fixed, std::array<int, max_vertices> & parent) const -> void
        {
            std::iota(parent.begin(), parent.begin() + n, 0);
            auto find = [&](int x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };
            for (auto & gamma : automorphisms) {
                bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int f) { return gamma[f] == f; });
                if (! fixes)
                    continue;
                for (int x = 0; x < n; ++x) {
                    int a = find(x), b = find(gamma[x]);
                    if (a != b)
                        parent[std::max(a, b)] = std::min(a, b);
                }
            }
            for (int x = 0; x < n; ++x)
                parent[x] = find(x);
        }

        auto search(Partition part, std::vector<int> & path) -> void
        {
            if (part.discrete()) {
                leaf(part, path);
                return;
            }

            int target = 0;
            while (part.end[target] - target == 1)
                target = part.end[target];
            std::vector<int> children;
            for (int p = target; p < part.end[target]; ++p)
                children.push_back(part.lab[p]);
            std::sort(children.begin(), children.end());

            int depth = static_cast<int>(path.size());
            std::vector<int> tried;
            std::array<int, max_vertices> orbit{};
            std::size_t seen_automorphisms = static_cast<std::size_t>(-1);
            for (int w : children) {
                if (! tried.empty()) {
                    if (seen_automorphisms != automorphisms.size()) {
                        orbits(path, orbit);
                        seen_automorphisms = automorphisms.size();
                    }
                    if (std::any_of(tried.begin(), tried.end(), [&](int u) { return orbit[u] == orbit[w]; }))
                        continue;
                }
                tried.push_back(w);

                Partition child = part;
                int s = target;
                int at = 0;
                for (int p = s; p < child.end[s]; ++p)
                    if (child.lab[p] == w)
                        at = p;
                std::swap(child.lab[s], child.lab[at]);
                int old_end = child.end[s];
                child.end[s] = static_cast<std::uint8_t>(s + 1);
                child.end[s + 1] = static_cast<std::uint8_t>(old_end);
                for (int p = s + 1; p < old_end; ++p)
                    child.start[p] = static_cast<std::uint8_t>(s + 1);
                ++child.cells;
                refine(child, {s});

                path.push_back(w);
                search(child, path);
                path.pop_back();

                if (jump_to >= 0) {
                    if (jump_to < depth)
                        return;
                    jump_to = -1;
                }
            }
        }
    };
}

auto CanonicalFormHash::operator()(const CanonicalForm & f) const noexcept -> std::size_t
{
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.order);
    for (auto r : f.rows) {
        h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
}

auto canonical_labeling(const Graph & g, int cap) -> CanonicalLabeling
{
    int n = g.order();
    if (n > cap)
        throw Error(ErrorKind::size_limit_exceeded,
                "canonical form requested for order " + std::to_string(n) + " above cap " + std::to_string(cap));

    CanonicalLabeling out;
    out.form.order = n;
    if (n == 0)
        return out;

    Searcher searcher(g);
    Partition root;
    root.n = n;
    root.cells = 1;
    for (int v = 0; v < n; ++v) {
        root.lab[v] = static_cast<std::uint8_t>(v);
        root.start[v] = 0;
    }
    root.end[0] = static_cast<std::uint8_t>(n);
    searcher.refine(root, {0});

    std::vector<int> path;
    searcher.search(root, path);

    out.form.rows.assign(searcher.best_cert.begin(), searcher.best_cert.begin() + n);
    out.position.assign(n, 0);
    for (int p = 0; p < n; ++p)
        out.position[searcher.best_lab[p]] = p;
    return out;
}

auto canonical(const Graph & g, int cap) -> CanonicalForm
{
    return canonical_labeling(g, cap).form;
}

auto graph_of(const CanonicalForm & form) -> Graph
{
    Graph g(form.order);
    for (int u = 0; u < form.order; ++u)
        for (int v = u + 1; v < form.order; ++v)
            if ((form.rows[u] >> v) & 1U)
                g.add_edge(u, v);
    return g;
}

auto is_isomorphic(const Graph & g, const Graph & h, int cap) -> bool
{
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return false;
    return canonical(g, cap) == canonical(h, cap);
}

} // namespace vminor
