#include <plabel/serialization.hpp>

#include <plabel/errors.hpp>
#include <plabel/graph_io.hpp>

namespace plabel {

Json labelling_to_json(int p, const TotalLabelling & c)
{
    Json labels = Json::object();
    for (const auto & [x, color] : c)
        labels[x.key()] = color;
    return Json{{"p", p}, {"labels", std::move(labels)}};
}

TotalLabelling labelling_from_json(const Json & j)
{
    TotalLabelling c;
    for (const auto & [key, value] : j.at("labels").items())
        c.set(Element::from_key(key), value.get<Color>());
    return c;
}

Json lists_to_json(int p, const ListAssignment & lists)
{
    Json out = Json::object();
    for (const auto & [x, l] : lists)
        out[x.key()] = l;
    return Json{{"p", p}, {"lists", std::move(out)}};
}

ListAssignment lists_from_json(const Json & j)
{
    const auto & body = j.contains("lists") ? j.at("lists") : j.at("labels");
    ListAssignment lists;
    for (const auto & [key, value] : body.items())
        lists.set(Element::from_key(key), value.get<std::vector<Color>>());
    return lists;
}

Json graph_to_json(const Graph & g)
{
    return Json{{"n", g.order()}, {"graph6", to_graph6(g)}};
}

Graph graph_from_json(const Json & j)
{
    Graph g = from_graph6(j.at("graph6").get<std::string>());
    if (j.contains("n") && j.at("n").get<int>() != g.order())
        throw ParseError("graph6 vertex count disagrees with \"n\"", 1, 0);
    return g;
}

Json parse_json(const std::string & text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error & e) {
        throw ParseError(e.what(), 1, e.byte);
    }
}

std::string to_dot(const Graph & g, const TotalLabelling & c)
{
    auto label = [&](const Element & x) {
        auto color = c.get(x);
        return color ? std::to_string(*color) : std::string("-");
    };
    std::string out = "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + ":" + label(Element::vertex(v)) + "\"];\n";
    for (const auto & e : g.edges())
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + " [label=\"" + label(Element::edge(e)) + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace plabel
