#pragma once

#include <string>

#include <json.hpp>

#include <plabel/graph.hpp>
#include <plabel/labelling.hpp>

namespace plabel {

using Json = nlohmann::ordered_json;

// {"p": P, "labels": {"v:0": 3, "e:0-1": 5, ...}}, keys in element order.
Json labelling_to_json(int p, const TotalLabelling & c);
TotalLabelling labelling_from_json(const Json & j);

// {"p": P, "lists": {"v:0": [0, 1, 2], ...}}, keys in element order.
// "labels" is accepted in place of "lists" when reading.
Json lists_to_json(int p, const ListAssignment & lists);
ListAssignment lists_from_json(const Json & j);

// {"n": N, "graph6": "..."}
Json graph_to_json(const Graph & g);
Graph graph_from_json(const Json & j);

// Parses text as JSON; malformed input becomes a ParseError.
Json parse_json(const std::string & text);

// Graphviz rendering with colors as vertex and edge labels.
std::string to_dot(const Graph & g, const TotalLabelling & c);

} // namespace plabel
