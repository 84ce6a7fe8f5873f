#include "knotfam/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace knotfam {

namespace {

using Occ = std::vector<std::vector<Incidence>>;

bool same(const Incidence& a, const Incidence& b) { return a.crossing == b.crossing && a.slot == b.slot; }

Occ occurrences(const PlanarDiagram& d) {
    Occ occ(d.arc_count + 1);
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int s = 0; s < 4; ++s) {
            int e = d.crossings[c][s];
            if (e >= 1 && e <= d.arc_count) occ[e].push_back({c, s});
        }
    return occ;
}

Incidence other_end(const Occ& occ, int arc, const Incidence& here) {
    const auto& o = occ[arc];
    return same(o[0], here) ? o[1] : o[0];
}

// Walk one component. Starting arc `e` enters a crossing at `head`.
// Returns the (arc, head) sequence.
std::vector<std::pair<int, Incidence>> walk(const PlanarDiagram& d, const Occ& occ, int e, Incidence head) {
    std::vector<std::pair<int, Incidence>> seq;
    int arc = e;
    Incidence h = head;
    do {
        seq.emplace_back(arc, h);
        Incidence t{h.crossing, (h.slot + 2) % 4};
        arc = d.crossings[t.crossing][t.slot];
        h = other_end(occ, arc, t);
    } while (!(arc == e && same(h, head)));
    return seq;
}

int count_graph_components(const PlanarDiagram& d, const Occ& occ) {
    int n = d.crossing_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 1; e <= d.arc_count; ++e)
        if (occ[e].size() == 2) parent[find(occ[e][0].crossing)] = find(occ[e][1].crossing);
    int k = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++k;
    return k;
}

int count_faces(const PlanarDiagram& d, const Occ& occ) {
    int n = d.crossing_count();
    std::vector<char> seen(4 * n, 0);
    int faces = 0;
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            if (seen[4 * c + k]) continue;
            ++faces;
            Incidence cur{c, k};
            while (!seen[4 * cur.crossing + cur.slot]) {
                seen[4 * cur.crossing + cur.slot] = 1;
                Incidence out{cur.crossing, (cur.slot + 1) % 4};
                cur = other_end(occ, d.crossings[out.crossing][out.slot], out);
            }
        }
    return faces;
}

}  // namespace

ValidationReport validate(const PlanarDiagram& d) {
    ValidationReport r;
    if (d.crossings.empty()) {
        r.faces = 2;
        r.components = 1;
        return r;
    }
    if (d.arc_count < 1) {
        r.ok = false;
        r.violations.push_back("arc_count must be positive");
        return r;
    }
    for (size_t c = 0; c < d.crossings.size(); ++c)
        for (int e : d.crossings[c])
            if (e < 1 || e > d.arc_count) {
                r.ok = false;
                r.violations.push_back("crossing " + std::to_string(c) + " uses arc label " + std::to_string(e) +
                                       " outside 1.." + std::to_string(d.arc_count));
            }
    Occ occ = occurrences(d);
    for (int e = 1; e <= d.arc_count; ++e)
        if (occ[e].size() != 2) {
            r.ok = false;
            r.violations.push_back("arc " + std::to_string(e) + " appears " + std::to_string(occ[e].size()) +
                                   " times (expected 2)");
        }
    if (!r.ok) return r;

    // orientation consistency: along each component every under-pass is entered at slot 0
    std::vector<char> seen(d.arc_count + 1, 0);
    for (int e = 1; e <= d.arc_count; ++e) {
        if (seen[e]) continue;
        auto seq = walk(d, occ, e, occ[e][0]);
        int fwd = 0, bwd = 0;
        for (auto& [a, h] : seq) {
            seen[a] = 1;
            if (h.slot == 0) ++fwd;
            if (h.slot == 2) ++bwd;
        }
        ++r.components;
        if (fwd > 0 && bwd > 0) {
            r.ok = false;
            r.violations.push_back("component through arc " + std::to_string(e) +
                                   " is not consistently oriented by the under-strand convention");
        }
    }
    int k = count_graph_components(d, occ);
    r.connected = (k == 1);
    r.faces = count_faces(d, occ);
    if (r.faces != d.crossing_count() + 1 + k) {
        r.ok = false;
        r.violations.push_back("Euler check failed: " + std::to_string(r.faces) + " faces for " +
                               std::to_string(d.crossing_count()) + " crossings");
    }
    return r;
}

void require_valid(const PlanarDiagram& d) {
    auto r = validate(d);
    if (!r.ok) throw DiagramError("invalid diagram" + (d.name.empty() ? "" : " '" + d.name + "'") + ": " + r.violations.front());
}

static void require_connected(const PlanarDiagram& d) {
    require_valid(d);
    if (!d.crossings.empty() && count_graph_components(d, occurrences(d)) != 1)
        throw DiagramError("split diagrams are not supported");
}

ComponentInfo components(const PlanarDiagram& d) {
    require_valid(d);
    ComponentInfo info;
    info.arc_component.assign(d.arc_count + 1, -1);
    if (d.crossings.empty()) {
        info.count = 1;
        for (int e = 1; e <= d.arc_count; ++e) info.arc_component[e] = 0;
        return info;
    }
    Occ occ = occurrences(d);
    for (int e = 1; e <= d.arc_count; ++e) {
        if (info.arc_component[e] >= 0) continue;
        for (auto& [a, h] : walk(d, occ, e, occ[e][0])) info.arc_component[a] = info.count;
        ++info.count;
    }
    return info;
}

Orientation orientation(const PlanarDiagram& d) {
    require_valid(d);
    Orientation o;
    o.tail.assign(d.arc_count + 1, {-1, -1});
    o.head.assign(d.arc_count + 1, {-1, -1});
    o.sign.assign(d.crossing_count(), 0);
    Occ occ = occurrences(d);
    std::vector<char> seen(d.arc_count + 1, 0);
    for (int e = 1; e <= d.arc_count; ++e) {
        if (seen[e]) continue;
        auto seq = walk(d, occ, e, occ[e][0]);
        bool reverse = std::any_of(seq.begin(), seq.end(), [](auto& p) { return p.second.slot == 2; });
        for (auto& [a, h] : seq) {
            seen[a] = 1;
            Incidence t = other_end(occ, a, h);
            if (reverse) std::swap(t, h);
            o.head[a] = h;
            o.tail[a] = t;
        }
    }
    for (int c = 0; c < d.crossing_count(); ++c) {
        int over = d.crossings[c][3];
        o.sign[c] = same(o.head[over], Incidence{c, 3}) ? 1 : -1;
    }
    return o;
}

int writhe(const PlanarDiagram& d) {
    if (d.crossings.empty()) return 0;
    auto o = orientation(d);
    return std::accumulate(o.sign.begin(), o.sign.end(), 0);
}

bool is_alternating(const PlanarDiagram& d) {
    require_valid(d);
    Occ occ = occurrences(d);
    for (int e = 1; e <= d.arc_count; ++e)
        if (!d.crossings.empty() && occ[e][0].slot % 2 == occ[e][1].slot % 2) return false;
    return true;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
    PlanarDiagram m = d;
    if (d.crossings.empty()) return m;
    auto o = orientation(d);
    for (int c = 0; c < d.crossing_count(); ++c) {
        auto x = d.crossings[c];
        // the old over strand becomes the under strand; start at its incoming end
        if (o.sign[c] > 0) m.crossings[c] = {x[3], x[0], x[1], x[2]};
        else m.crossings[c] = {x[1], x[2], x[3], x[0]};
    }
    return m;
}

FaceData faces_and_coloring(const PlanarDiagram& d) { return faces_and_coloring(d, false); }

FaceData faces_and_coloring(const PlanarDiagram& d, bool swap_colors) {
    require_connected(d);
    FaceData fd;
    const int n = d.crossing_count();
    if (n == 0) return fd;
    Occ occ = occurrences(d);
    fd.corner_face.assign(4 * n, -1);
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            if (fd.corner_face[4 * c + k] >= 0) continue;
            int f = static_cast<int>(fd.faces.size());
            fd.faces.emplace_back();
            Incidence cur{c, k};
            while (fd.corner_face[4 * cur.crossing + cur.slot] < 0) {
                fd.corner_face[4 * cur.crossing + cur.slot] = f;
                fd.faces[f].push_back(cur);
                Incidence out{cur.crossing, (cur.slot + 1) % 4};
                cur = other_end(occ, d.crossings[out.crossing][out.slot], out);
            }
        }
    // the face on the left of the marked arc is unbounded
    int arc = d.unbounded_arc.value_or(1);
    if (arc < 1 || arc > d.arc_count) throw DiagramError("unbounded_arc out of range");
    auto o = orientation(d);
    fd.unbounded_face = fd.corner_face[4 * o.tail[arc].crossing + o.tail[arc].slot];

    const int F = static_cast<int>(fd.faces.size());
    std::vector<std::vector<int>> adj(F);
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            int a = fd.corner_face[4 * c + k], b = fd.corner_face[4 * c + (k + 1) % 4];
            adj[a].push_back(b);
        }
    fd.color.assign(F, -1);
    std::deque<int> queue{fd.unbounded_face};
    fd.color[fd.unbounded_face] = swap_colors ? 1 : 0;
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (int g : adj[f]) {
            if (fd.color[g] < 0) {
                fd.color[g] = 1 - fd.color[f];
                queue.push_back(g);
            } else if (fd.color[g] == fd.color[f]) {
                throw DiagramError("checkerboard coloring failed");
            }
        }
    }
    return fd;
}

GoeritzData goeritz(const PlanarDiagram& d, bool swap_colors) {
    GoeritzData g;
    if (d.crossings.empty()) return g;
    FaceData fd = faces_and_coloring(d, swap_colors);
    auto o = orientation(d);
    const int n = d.crossing_count();
    std::vector<int> index(fd.faces.size(), -1);
    for (size_t f = 0; f < fd.faces.size(); ++f)
        if (fd.color[f] == 0) {
            index[f] = static_cast<int>(g.white_faces.size());
            g.white_faces.push_back(static_cast<int>(f));
        }
    const int W = static_cast<int>(g.white_faces.size());
    g.full = IntegerMatrix(W, W);
    g.eta.assign(n, 0);
    g.type_two.assign(n, false);
    auto incoming = [&](int c, int s) { return o.head[d.crossings[c][s]].crossing == c && o.head[d.crossings[c][s]].slot == s; };
    for (int c = 0; c < n; ++c) {
        int k = fd.color[fd.corner_face[4 * c]] == 0 ? 0 : 1;  // white corners are k and k+2
        // +1 when the white corners flank the under strand on its counterclockwise side
        g.eta[c] = (k == 0) ? 1 : -1;
        // type II: the strands bounding a white corner run one in, one out
        g.type_two[c] = incoming(c, k) != incoming(c, (k + 1) % 4);
        if (g.type_two[c]) g.correction += g.eta[c];
        int a = index[fd.corner_face[4 * c + k]], b = index[fd.corner_face[4 * c + k + 2]];
        if (a == b) continue;
        g.full.at(a, b) -= g.eta[c];
        g.full.at(b, a) -= g.eta[c];
        g.full.at(a, a) += g.eta[c];
        g.full.at(b, b) += g.eta[c];
    }
    g.deleted_face = W - 1;
    g.reduced = IntegerMatrix(W - 1, W - 1);
    for (int i = 0; i < W - 1; ++i)
        for (int j = 0; j < W - 1; ++j) g.reduced.at(i, j) = g.full.at(i, j);
    return g;
}

PlanarDiagram orient_pd(const std::vector<std::array<int, 4>>& raw, std::vector<std::pair<int, int>>* label_map) {
    PlanarDiagram d;
    const int n = static_cast<int>(raw.size());
    std::map<int, std::vector<Incidence>> occ;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) occ[raw[c][s]].push_back({c, s});
    for (auto& [e, v] : occ)
        if (v.size() != 2) throw DiagramError("arc " + std::to_string(e) + " does not have two ends");
    auto other = [&](int e, Incidence h) { return same(occ[e][0], h) ? occ[e][1] : occ[e][0]; };

    std::map<int, int> relabel;
    std::map<int, Incidence> head;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            int e0 = raw[c][s];
            if (relabel.count(e0)) continue;
            Incidence h0{c, s};
            int e = e0;
            Incidence h = h0;
            do {
                relabel[e] = static_cast<int>(relabel.size()) + 1;
                head[e] = h;
                Incidence t{h.crossing, (h.slot + 2) % 4};
                e = raw[t.crossing][t.slot];
                h = other(e, t);
            } while (!(e == e0 && same(h, h0)));
        }
    d.arc_count = static_cast<int>(relabel.size());
    d.crossings.resize(n);
    for (int c = 0; c < n; ++c) {
        auto x = raw[c];
        if (!same(head[x[0]], Incidence{c, 0})) x = {x[2], x[3], x[0], x[1]};
        for (int s = 0; s < 4; ++s) d.crossings[c][s] = relabel[x[s]];
    }
    if (label_map)
        for (auto& [a, b] : relabel) label_map->emplace_back(a, b);
    return d;
}

nlohmann::json diagram_to_json(const PlanarDiagram& d) {
    nlohmann::json j;
    j["name"] = d.name;
    j["arc_count"] = d.arc_count;
    j["crossings"] = nlohmann::json::array();
    for (auto& c : d.crossings) j["crossings"].push_back({c[0], c[1], c[2], c[3]});
    if (d.marked_curve) j["marked_curve"] = *d.marked_curve;
    if (d.unbounded_arc) j["unbounded_arc"] = *d.unbounded_arc;
    return j;
}

PlanarDiagram diagram_from_json(const nlohmann::json& j) {
    PlanarDiagram d;
    try {
        d.name = j.value("name", std::string());
        d.arc_count = j.at("arc_count").get<int>();
        for (auto& c : j.at("crossings")) {
            if (!c.is_array() || c.size() != 4) throw DiagramError("crossing entries must have 4 labels");
            d.crossings.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>(), c[3].get<int>()});
        }
        if (j.contains("marked_curve")) {
            auto m = j.at("marked_curve");
            if (!m.is_array() || m.size() != 4) throw DiagramError("marked_curve must have 4 labels");
            d.marked_curve = std::array<int, 4>{m[0].get<int>(), m[1].get<int>(), m[2].get<int>(), m[3].get<int>()};
        }
        if (j.contains("unbounded_arc")) d.unbounded_arc = j.at("unbounded_arc").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw DiagramError(std::string("malformed diagram JSON: ") + e.what());
    }
    return d;
}

}  // namespace knotfam
