#include <algorithm>
#include <set>
#include <string>

#include "qtrace/surface.hpp"

namespace qtrace {

std::vector<ArcEnd> side_endpoints(const GoodPositionLink& link, int t, int s) {
  std::vector<std::pair<int, ArcEnd>> ends;
  for (size_t i = 0; i < link.arcs.size(); ++i) {
    const TriangleArc& a = link.arcs[i];
    if (a.triangle != t) continue;
    if (a.entry_side == s) ends.push_back({a.height, {static_cast<int>(i), false}});
    if (a.exit_side == s) ends.push_back({a.height, {static_cast<int>(i), true}});
  }
  std::sort(ends.begin(), ends.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<ArcEnd> r;
  for (const auto& e : ends) r.push_back(e.second);
  return r;
}

namespace {

Diagnostics fail(std::string m) { return {false, std::move(m)}; }

std::string show(const std::vector<Dir>& d) {
  std::string s;
  for (Dir x : d) s += x == Dir::Right ? 'R' : 'L';
  return s.empty() ? "(none)" : s;
}

// Strand directions on biangle side `side` (0 left, 1 right) induced by the
// arcs of the triangle glued there.
std::vector<Dir> interface_dirs(const GoodPositionLink& link, Incidence in, int side) {
  std::vector<Dir> d;
  for (const ArcEnd& e : side_endpoints(link, in.triangle, in.side))
    d.push_back((e.exit == (side == 0)) ? Dir::Right : Dir::Left);
  return d;
}

}  // namespace

Diagnostics validate_good_position(const GoodPositionLink& link, const IdealTriangulation& t, int n,
                                   bool require_states) {
  std::set<std::pair<int, int>> heights;
  for (size_t i = 0; i < link.arcs.size(); ++i) {
    const TriangleArc& a = link.arcs[i];
    std::string tag = "arc " + std::to_string(i) + ": ";
    if (a.triangle < 0 || a.triangle >= t.triangle_count()) return fail(tag + "triangle out of range");
    if (a.entry_side < 0 || a.entry_side > 2 || a.exit_side < 0 || a.exit_side > 2)
      return fail(tag + "side must be 0, 1 or 2");
    if (a.entry_side == a.exit_side)
      return fail(tag + "enters and exits the same side; U-turns belong in a biangle");
    if (exit_side(a.turn, a.entry_side) != a.exit_side) return fail(tag + "turn disagrees with the exit side");
    if (!heights.insert({a.triangle, a.height}).second)
      return fail(tag + "height " + std::to_string(a.height) + " repeated in triangle " + std::to_string(a.triangle));
  }
  for (const auto& [id, d] : link.biangles) {
    (void)d;
    bool known = false;
    for (const EdgeRecord& e : t.edges()) known |= e.id == id;
    if (!known) return fail("biangle for unknown edge " + std::to_string(id));
  }
  for (const auto& [id, st] : link.boundary_states) {
    (void)st;
    bool ok = false;
    for (const EdgeRecord& e : t.edges()) ok |= e.id == id && e.boundary;
    if (!ok) return fail("states given for edge " + std::to_string(id) + ", which is not a boundary edge");
  }
  for (const SplitBiangle& b : split_triangulation(t).biangles) {
    std::string tag = "edge " + std::to_string(b.edge_id) + ": ";
    std::optional<std::vector<Dir>> left, right;
    if (b.left.triangle >= 0) left = interface_dirs(link, b.left, 0);
    if (b.right.triangle >= 0) right = interface_dirs(link, b.right, 1);
    std::vector<Dir> lhs, rhs;
    auto it = link.biangles.find(b.edge_id);
    if (it == link.biangles.end()) {
      lhs = rhs = left ? *left : *right;
    } else {
      lhs = it->second.left;
      try {
        rhs = right_boundary(it->second);
      } catch (const Error& e) {
        return fail(tag + e.what());
      }
    }
    if (left && lhs != *left)
      return fail(tag + "left side strands " + show(lhs) + " do not match triangle arcs " + show(*left));
    if (right && rhs != *right)
      return fail(tag + "right side strands " + show(rhs) + " do not match triangle arcs " + show(*right));
    if (require_states && (!left || !right)) {
      size_t count = left ? rhs.size() : lhs.size();
      auto st = link.boundary_states.find(b.edge_id);
      size_t given = st == link.boundary_states.end() ? 0 : st->second.size();
      if (given != count)
        return fail(tag + "expected " + std::to_string(count) + " boundary states, got " + std::to_string(given));
      if (count > 0)
        for (int s : st->second)
          if (s < 1 || s > n) return fail(tag + "boundary state " + std::to_string(s) + " out of range");
    }
  }
  return {};
}

}  // namespace qtrace
