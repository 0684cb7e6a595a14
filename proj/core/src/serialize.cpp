#include <difflat/error.hpp>
#include <difflat/serialize.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace difflat {

using nlohmann::json;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

auto lattice_to_json(const FinLattice & lattice) -> json
{
    json j;
    j["n"] = lattice.size();
    auto covers = json::array();
    for (auto [lo, hi] : lattice.covers())
        covers.push_back({lo, hi});
    j["covers"] = std::move(covers);
    if (! lattice.name().empty())
        j["name"] = lattice.name();
    if (lattice.has_custom_labels())
        j["labels"] = vector<string>(lattice.labels().begin(), lattice.labels().end());
    return j;
}

auto lattice_from_json(const json & j) -> FinLattice
{
    auto bad = [](const string & msg) { return Error(ErrorKind::Parse, msg); };
    if (! j.is_object())
        throw bad("lattice must be a JSON object");
    if (! j.contains("n") || ! j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw bad("lattice needs a non-negative integer field \"n\"");
    if (! j.contains("covers") || ! j["covers"].is_array())
        throw bad("lattice needs an array field \"covers\"");
    auto n = j["n"].get<size_t>();
    vector<Cover> covers;
    for (const auto & c : j["covers"]) {
        if (! c.is_array() || c.size() != 2 || ! c[0].is_number_integer() || ! c[1].is_number_integer()
            || c[0].get<long long>() < 0 || c[1].get<long long>() < 0)
            throw bad("each cover must be a pair of non-negative integers");
        covers.emplace_back(c[0].get<Elem>(), c[1].get<Elem>());
    }
    string name;
    if (j.contains("name")) {
        if (! j["name"].is_string())
            throw bad("\"name\" must be a string");
        name = j["name"].get<string>();
    }
    vector<string> labels;
    if (j.contains("labels")) {
        if (! j["labels"].is_array() || ! std::all_of(j["labels"].begin(), j["labels"].end(), [](const json & x) { return x.is_string(); }))
            throw bad("\"labels\" must be an array of strings");
        labels = j["labels"].get<vector<string>>();
    }
    return lattice_from_covers(n, covers, std::move(name), std::move(labels));
}

auto parse_json_text(string_view text, string_view source) -> json
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error & e) {
        // byte is 1-based and points just past the offending character.
        auto offset = std::min<size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        size_t line = 1, column = 1;
        for (size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        string what = e.what();
        auto colon = what.rfind(": ");
        auto reason = colon == string::npos ? what : what.substr(colon + 2);
        throw Error(ErrorKind::Parse,
            string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + reason);
    }
}

auto read_json_file(const string & path) -> json
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error(ErrorKind::BadInput, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

auto read_lattice_file(const string & path) -> FinLattice
{
    return lattice_from_json(read_json_file(path));
}

auto derivation_to_json(const OperatorMap & d) -> json
{
    return {{"image", vector<Elem>(d.image().begin(), d.image().end())}};
}

auto parse_image_spec(const FinLattice & lattice, string_view spec) -> vector<Elem>
{
    vector<Elem> image;
    size_t start = 0;
    while (start <= spec.size()) {
        auto end = spec.find(',', start);
        if (end == string_view::npos)
            end = spec.size();
        auto token = spec.substr(start, end - start);
        while (! token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (! token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        if (token.empty())
            throw Error(ErrorKind::BadInput, "empty entry in image list");

        auto labels = lattice.labels();
        auto it = std::find(labels.begin(), labels.end(), token);
        if (it != labels.end()) {
            image.push_back(static_cast<Elem>(it - labels.begin()));
        } else if (std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            auto v = std::stoul(string(token));
            if (v >= lattice.size())
                throw Error(ErrorKind::BadInput, "element id " + string(token) + " out of range");
            image.push_back(static_cast<Elem>(v));
        } else {
            throw Error(ErrorKind::BadInput, "unknown element '" + string(token) + "'");
        }
        start = end + 1;
    }
    if (image.size() != lattice.size())
        throw Error(ErrorKind::BadInput,
            "image lists " + std::to_string(image.size()) + " values for " + std::to_string(lattice.size()) + " elements");
    return image;
}

auto two_row_table(const OperatorMap & d) -> string
{
    const auto & l = d.lattice();
    auto order = l.linear_extension();
    vector<size_t> width;
    for (auto x : order)
        width.push_back(std::max(l.label(x).size(), l.label(d(x)).size()));
    auto row = [&](auto value) {
        string s = "(";
        for (size_t i = 0; i < order.size(); ++i) {
            auto text = value(order[i]);
            s += (i ? " " : "") + text + string(width[i] - text.size(), ' ');
        }
        while (! s.empty() && s.back() == ' ')
            s.pop_back();
        return s + ")";
    };
    return row([&](Elem x) { return l.label(x); }) + "\n" + row([&](Elem x) { return l.label(d(x)); }) + "\n";
}

} // namespace difflat
