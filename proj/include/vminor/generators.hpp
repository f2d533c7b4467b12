#ifndef VMINOR_GENERATORS_HPP
#define VMINOR_GENERATORS_HPP

#include <vminor/graph.hpp>

#include <string>
#include <string_view>

namespace vminor
{

enum class Family
{
    path,      // P_n: 1-2-...-n
    cycle,     // C_n, n >= 3: 1-2-...-n-1
    wheel,     // W_n, n >= 3: rim 1..n as C_n, hub "h" is the last vertex
    complete,  // K_n
    kts,       // K_n^S_n: a1..an clique, b1..bn stable, a_i ~ b_j iff i >= j
    bull,      // the five named graphs below use the 1..5 labels of the
    banner,    // drawings in the local-equivalence chain starting at P5
    dart,
    kite,
    hvn,
    w4prime,
    butterfly, // two triangles sharing vertex 3: P5 after *2 *4
};

struct GraphFamily
{
    Family family;
    int n = 0;
};

auto family_name(Family f) -> std::string_view;

/// Parses "path:5", "kts:3", "bull" (named graphs take no parameter).
auto parse_family(std::string_view text) -> GraphFamily;

/// Builds the named graph with its documented labelling. Throws
/// invalid-parameter when n is below the family minimum.
auto generate(const GraphFamily & family) -> Graph;

inline auto path_graph(int n) -> Graph { return generate({Family::path, n}); }
inline auto cycle_graph(int n) -> Graph { return generate({Family::cycle, n}); }
inline auto wheel_graph(int n) -> Graph { return generate({Family::wheel, n}); }
inline auto complete_graph(int n) -> Graph { return generate({Family::complete, n}); }
inline auto kts_graph(int n) -> Graph { return generate({Family::kts, n}); }

/// Vertex index of a_i / b_j (1-based) in kts_graph(n).
constexpr auto kts_a(int, int i) -> int { return i - 1; }
constexpr auto kts_b(int n, int j) -> int { return n + j - 1; }

} // namespace vminor

#endif
