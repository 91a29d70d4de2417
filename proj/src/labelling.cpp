#include <plabel/labelling.hpp>

#include <plabel/errors.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace plabel {

Element Element::edge(Vertex u, Vertex v)
{
    return edge(make_edge(u, v));
}

std::string Element::key() const
{
    if (is_vertex())
        return "v:" + std::to_string(a);
    return "e:" + std::to_string(a) + "-" + std::to_string(b);
}

namespace {

int parse_index(std::string_view token, std::string_view whole)
{
    int value = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        throw std::invalid_argument("bad element key '" + std::string(whole) + "'");
    return value;
}

} // namespace

Element Element::from_key(std::string_view key)
{
    if (key.size() > 2 && key.substr(0, 2) == "v:")
        return vertex(parse_index(key.substr(2), key));
    if (key.size() > 2 && key.substr(0, 2) == "e:") {
        const auto body = key.substr(2);
        const auto dash = body.find('-');
        if (dash == std::string_view::npos)
            throw std::invalid_argument("bad element key '" + std::string(key) + "'");
        return edge(parse_index(body.substr(0, dash), key), parse_index(body.substr(dash + 1), key));
    }
    throw std::invalid_argument("bad element key '" + std::string(key) + "'");
}

bool contains(const Graph & g, const Element & x)
{
    if (x.is_vertex())
        return g.has_vertex(x.a);
    return x.a < x.b && g.adjacent(x.a, x.b);
}

std::vector<Element> elements(const Graph & g)
{
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(element_count(g)));
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(Element::vertex(v));
    for (const auto & e : g.edges())
        out.push_back(Element::edge(e));
    return out;
}

int element_index(const Graph & g, const Element & x)
{
    if (x.is_vertex()) {
        if (! g.has_vertex(x.a))
            throw DomainError("element " + x.key() + " not in graph");
        return x.a;
    }
    auto i = g.edge_index(x.a, x.b);
    if (! i || x.a > x.b)
        throw DomainError("element " + x.key() + " not in graph");
    return g.order() + *i;
}

std::optional<Color> TotalLabelling::get(const Element & x) const
{
    auto it = labels_.find(x);
    if (it == labels_.end())
        return std::nullopt;
    return it->second;
}

Color TotalLabelling::at(const Element & x) const
{
    auto it = labels_.find(x);
    if (it == labels_.end())
        throw DomainError("element " + x.key() + " is unlabelled");
    return it->second;
}

std::optional<Color> TotalLabelling::min_color() const
{
    if (labels_.empty())
        return std::nullopt;
    return std::min_element(labels_.begin(), labels_.end(),
            [](const auto & l, const auto & r) { return l.second < r.second; })->second;
}

std::optional<Color> TotalLabelling::max_color() const
{
    if (labels_.empty())
        return std::nullopt;
    return std::max_element(labels_.begin(), labels_.end(),
            [](const auto & l, const auto & r) { return l.second < r.second; })->second;
}

Color TotalLabelling::span() const
{
    if (labels_.empty())
        return 0;
    return *max_color() - *min_color();
}

TotalLabelling TotalLabelling::shifted(Color offset) const
{
    TotalLabelling out;
    for (const auto & [x, c] : labels_)
        out.set(x, c + offset);
    return out;
}

void ListAssignment::set(const Element & x, List colors)
{
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    if (colors.empty())
        throw std::invalid_argument("empty list for " + x.key());
    lists_[x] = std::move(colors);
}

const ListAssignment::List & ListAssignment::at(const Element & x) const
{
    auto it = lists_.find(x);
    if (it == lists_.end())
        throw DomainError("no list for element " + x.key());
    return it->second;
}

std::optional<int> ListAssignment::uniform_size() const
{
    if (lists_.empty())
        return std::nullopt;
    const auto k = lists_.begin()->second.size();
    for (const auto & [x, l] : lists_)
        if (l.size() != k)
            return std::nullopt;
    return static_cast<int>(k);
}

int ListAssignment::min_list_size() const
{
    int best = 0;
    bool first = true;
    for (const auto & [x, l] : lists_) {
        if (first || static_cast<int>(l.size()) < best)
            best = static_cast<int>(l.size());
        first = false;
    }
    return best;
}

std::optional<Color> ListAssignment::min_color() const
{
    std::optional<Color> best;
    for (const auto & [x, l] : lists_)
        if (! best || l.front() < *best)
            best = l.front();
    return best;
}

std::optional<Color> ListAssignment::max_color() const
{
    std::optional<Color> best;
    for (const auto & [x, l] : lists_)
        if (! best || l.back() > *best)
            best = l.back();
    return best;
}

ListAssignment ListAssignment::shifted(Color offset) const
{
    ListAssignment out;
    for (const auto & [x, l] : lists_) {
        List moved = l;
        for (auto & c : moved)
            c += offset;
        out.lists_[x] = std::move(moved);
    }
    return out;
}

bool ListAssignment::covers_exactly(const Graph & g) const
{
    if (lists_.size() != static_cast<std::size_t>(element_count(g)))
        return false;
    return std::all_of(lists_.begin(), lists_.end(), [&](const auto & kv) { return plabel::contains(g, kv.first); });
}

ListAssignment ListAssignment::full(const Graph & g, Color lo, Color hi)
{
    if (hi < lo)
        throw std::invalid_argument("empty color range");
    List range;
    for (Color c = lo; c <= hi; ++c)
        range.push_back(c);
    ListAssignment out;
    for (const auto & x : elements(g))
        out.lists_[x] = range;
    return out;
}

std::vector<Color> p_ball(Color x, int p)
{
    std::vector<Color> out;
    for (Color c = x - (p - 1); c <= x + (p - 1); ++c)
        out.push_back(c);
    return out;
}

std::string_view constraint_name(Constraint c)
{
    switch (c) {
    case Constraint::adjacent_vertices: return "adjacent-vertices";
    case Constraint::adjacent_edges: return "adjacent-edges";
    case Constraint::vertex_edge_separation: return "vertex-edge-separation";
    case Constraint::unlabelled: return "unlabelled";
    }
    return "unknown";
}

Verdict is_valid(const Graph & g, int p, const TotalLabelling & c, bool require_total)
{
    if (p < 0)
        throw std::invalid_argument("p must be non-negative");
    for (const auto & [x, color] : c)
        if (! contains(g, x))
            throw DomainError("element " + x.key() + " not in graph");

    Verdict verdict;
    auto & out = verdict.violations;

    for (const auto & e : g.edges()) {
        const auto cu = c.get(Element::vertex(e.u));
        const auto cv = c.get(Element::vertex(e.v));
        if (cu && cv && *cu == *cv)
            out.push_back({Constraint::adjacent_vertices, Element::vertex(e.u), Element::vertex(e.v)});
    }

    // adjacent edges share an endpoint; enumerate pairs around each vertex
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const auto x = Element::edge(v, nbrs[i]);
                const auto y = Element::edge(v, nbrs[j]);
                const auto cx = c.get(x);
                const auto cy = c.get(y);
                if (cx && cy && *cx == *cy)
                    out.push_back({Constraint::adjacent_edges, std::min(x, y), std::max(x, y)});
            }
    }

    for (const auto & e : g.edges()) {
        const auto edge = Element::edge(e);
        const auto ce = c.get(edge);
        if (! ce)
            continue;
        for (Vertex end : {e.u, e.v}) {
            const auto cv = c.get(Element::vertex(end));
            if (cv && std::abs(*cv - *ce) < p)
                out.push_back({Constraint::vertex_edge_separation, Element::vertex(end), edge});
        }
    }

    if (require_total)
        for (const auto & x : elements(g))
            if (! c.contains(x))
                out.push_back({Constraint::unlabelled, x, x});

    std::sort(out.begin(), out.end(), [](const Violation & l, const Violation & r) {
        return std::tie(l.first, l.second, l.kind) < std::tie(r.first, r.second, r.kind);
    });
    return verdict;
}

bool respects_lists(const TotalLabelling & c, const ListAssignment & lists)
{
    for (const auto & [x, color] : c) {
        if (! lists.contains(x))
            return false;
        const auto & l = lists.at(x);
        if (! std::binary_search(l.begin(), l.end(), color))
            return false;
    }
    return true;
}

Verdict lp1_is_valid(const Graph & g, int p, const TotalLabelling & vertex_labels)
{
    for (const auto & [x, color] : vertex_labels)
        if (! x.is_vertex() || ! g.has_vertex(x.a))
            throw DomainError("L(p,1) labelling has non-vertex or foreign element " + x.key());

    Verdict verdict;
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto cu = vertex_labels.get(Element::vertex(u));
        if (! cu)
            continue;
        for (Vertex v : g.neighbors(u)) {
            if (v <= u)
                continue;
            const auto cv = vertex_labels.get(Element::vertex(v));
            if (cv && std::abs(*cu - *cv) < p)
                verdict.violations.push_back({Constraint::vertex_edge_separation, Element::vertex(u), Element::vertex(v)});
        }
        // distance exactly two: common neighbor, not adjacent
        std::vector<Vertex> second;
        for (Vertex w : g.neighbors(u))
            for (Vertex v : g.neighbors(w))
                if (v > u && ! g.adjacent(u, v))
                    second.push_back(v);
        std::sort(second.begin(), second.end());
        second.erase(std::unique(second.begin(), second.end()), second.end());
        for (Vertex v : second) {
            const auto cv = vertex_labels.get(Element::vertex(v));
            if (cv && *cu == *cv)
                verdict.violations.push_back({Constraint::adjacent_vertices, Element::vertex(u), Element::vertex(v)});
        }
    }
    return verdict;
}

namespace {

Element to_derived(const IncidenceMap & im, const Element & x)
{
    if (x.is_vertex()) {
        if (! im.base.has_vertex(x.a))
            throw DomainError("element " + x.key() + " not in base graph");
        return Element::vertex(im.vertex_image[x.a]);
    }
    const auto i = im.base.edge_index(x.a, x.b);
    if (! i)
        throw DomainError("element " + x.key() + " not in base graph");
    return Element::vertex(im.edge_image[*i]);
}

Element to_base(const IncidenceMap & im, const Element & y)
{
    if (! y.is_vertex() || ! im.derived.has_vertex(y.a))
        throw DomainError("element " + y.key() + " is not a vertex of the incidence graph");
    const Vertex w = y.a;
    if (w < im.base.order())
        return Element::vertex(w);
    return Element::edge(im.base.edges()[w - im.base.order()]);
}

} // namespace

TotalLabelling transport_to_incidence(const IncidenceMap & im, const TotalLabelling & c)
{
    TotalLabelling out;
    for (const auto & [x, color] : c)
        out.set(to_derived(im, x), color);
    return out;
}

ListAssignment transport_to_incidence(const IncidenceMap & im, const ListAssignment & lists)
{
    ListAssignment out;
    for (const auto & [x, l] : lists)
        out.set(to_derived(im, x), l);
    return out;
}

TotalLabelling transport_from_incidence(const IncidenceMap & im, const TotalLabelling & c)
{
    TotalLabelling out;
    for (const auto & [y, color] : c)
        out.set(to_base(im, y), color);
    return out;
}

ListAssignment transport_from_incidence(const IncidenceMap & im, const ListAssignment & lists)
{
    ListAssignment out;
    for (const auto & [y, l] : lists)
        out.set(to_base(im, y), l);
    return out;
}

std::vector<std::vector<Conflict>> total_conflicts(const Graph & g, int p)
{
    const int n = g.order();
    std::vector<std::vector<Conflict>> net(static_cast<std::size_t>(element_count(g)));
    auto link = [&](int a, int b, int sep) {
        if (sep <= 0)
            return;
        net[a].push_back({b, sep});
        net[b].push_back({a, sep});
    };
    for (int i = 0; i < g.size(); ++i) {
        const Edge & e = g.edges()[i];
        link(e.u, e.v, 1);
        link(e.u, n + i, p);
        link(e.v, n + i, p);
    }
    for (Vertex v = 0; v < n; ++v) {
        const auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                link(n + *g.edge_index(v, nbrs[i]), n + *g.edge_index(v, nbrs[j]), 1);
    }
    for (auto & row : net)
        std::sort(row.begin(), row.end(), [](const Conflict & l, const Conflict & r) { return l.other < r.other; });
    return net;
}

std::vector<std::vector<Conflict>> lp1_conflicts(const Graph & g, int p)
{
    const int n = g.order();
    std::vector<std::vector<Conflict>> net(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u) {
        std::vector<Vertex> second;
        for (Vertex w : g.neighbors(u)) {
            if (p > 0)
                net[u].push_back({w, p});
            for (Vertex v : g.neighbors(w))
                if (v != u && ! g.adjacent(u, v))
                    second.push_back(v);
        }
        std::sort(second.begin(), second.end());
        second.erase(std::unique(second.begin(), second.end()), second.end());
        for (Vertex v : second)
            net[u].push_back({v, 1});
        std::sort(net[u].begin(), net[u].end(), [](const Conflict & l, const Conflict & r) { return l.other < r.other; });
    }
    return net;
}

} // namespace plabel
