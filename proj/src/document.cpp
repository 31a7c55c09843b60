#include "cwcoh/document.hpp"

#include "cwcoh/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace cwcoh {

using nlohmann::json;

namespace {

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

Integer read_integer(const json& v, const std::string& path)
{
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
        return Integer(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        const bool digits = s.size() > start && std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                                            [](unsigned char c) { return std::isdigit(c); });
        if (digits) return Integer(s);
    }
    if (v.is_number_float()) throw SchemaError(path, "integer expected (write very large integers as strings)");
    throw SchemaError(path, "integer expected");
}

std::size_t read_count(const json& v, const std::string& path)
{
    const Integer i = read_integer(v, path);
    if (i < 0 || i > std::numeric_limits<long>::max()) throw SchemaError(path, "non-negative count expected");
    return static_cast<std::size_t>(i);
}

json write_integer(const Integer& i)
{
    if (i >= std::numeric_limits<std::int64_t>::min() && i <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(i));
    return json(i.str());
}

IntMatrix read_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& path)
{
    const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
    if (!v.is_array() || v.size() != rows)
        throw SchemaError(path, "expected a " + shape + " matrix (rows index the lower-dimensional cells)");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = v[i];
        if (!row.is_array() || row.size() != cols)
            throw SchemaError(path, "expected a " + shape + " matrix (rows index the lower-dimensional cells)");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = read_integer(row[j], path + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return m;
}

json write_matrix(const IntMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(write_integer(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

const json& field(const json& obj, const char* key, const std::string& path)
{
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

std::string join(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

CwComplex complex_from_boundaries(const json& doc, const std::string& path, std::string name, std::size_t base)
{
    const json& cells_json = field(doc, "cells", path);
    if (!cells_json.is_array() || cells_json.empty())
        throw SchemaError(join(path, "cells"), "non-empty array of counts expected");
    std::vector<std::size_t> cells;
    for (std::size_t n = 0; n < cells_json.size(); ++n)
        cells.push_back(read_count(cells_json[n], join(path, "cells") + "[" + std::to_string(n) + "]"));

    const std::size_t top = cells.size() - 1;
    const json empty = json::object();
    const json& bj = doc.contains("boundaries") ? doc["boundaries"] : empty;
    if (!bj.is_object()) throw SchemaError(join(path, "boundaries"), "object keyed by dimension expected");
    for (const auto& [key, value] : bj.items()) {
        bool known = false;
        for (std::size_t n = 1; n <= top; ++n) known = known || key == std::to_string(n);
        if (!known) throw SchemaError(join(path, "boundaries." + key), "no such dimension");
    }
    std::vector<IntMatrix> bounds;
    for (std::size_t n = 1; n <= top; ++n) {
        const std::string key = std::to_string(n);
        const std::string at = join(path, "boundaries." + key);
        if (!bj.contains(key)) {
            if (cells[n - 1] != 0 && cells[n] != 0) throw SchemaError(at, "missing field");
            bounds.emplace_back(cells[n - 1], cells[n]);
            continue;
        }
        bounds.push_back(read_matrix(bj[key], cells[n - 1], cells[n], at));
    }
    return CwComplex(std::move(name), std::move(cells), std::move(bounds), base);
}

CwComplex complex_from_presentation(const json& doc, const std::string& path, std::string name, std::size_t base)
{
    EdgePresentation p;
    p.vertices = read_count(field(doc, "vertices", path), join(path, "vertices"));
    p.basepoint = base;
    if (doc.contains("edges")) {
        const json& edges = doc["edges"];
        if (!edges.is_array()) throw SchemaError(join(path, "edges"), "array of vertex pairs expected");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const std::string at = join(path, "edges") + "[" + std::to_string(e) + "]";
            if (!edges[e].is_array() || edges[e].size() != 2) throw SchemaError(at, "vertex pair expected");
            p.edges.emplace_back(read_count(edges[e][0], at), read_count(edges[e][1], at));
        }
    }
    if (doc.contains("faces")) {
        const json& faces = doc["faces"];
        if (!faces.is_array()) throw SchemaError(join(path, "faces"), "array of attaching words expected");
        for (std::size_t f = 0; f < faces.size(); ++f) {
            const std::string at = join(path, "faces") + "[" + std::to_string(f) + "]";
            if (!faces[f].is_array()) throw SchemaError(at, "signed edge index list expected");
            std::vector<long> word;
            for (const auto& letter : faces[f]) word.push_back(static_cast<long>(read_integer(letter, at)));
            p.faces.push_back(std::move(word));
        }
    }
    try {
        return from_presentation(p, std::move(name));
    } catch (const MalformedWord& e) {
        throw SchemaError(join(path, "faces"), e.what());
    }
}

CwComplex complex_from_json(const json& doc, const std::string& path)
{
    if (!doc.is_object()) throw SchemaError(path.empty() ? "$" : path, "object expected");
    std::string name = "complex";
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw SchemaError(join(path, "name"), "string expected");
        name = doc["name"].get<std::string>();
    }
    const std::size_t base = doc.contains("basepoint") ? read_count(doc["basepoint"], join(path, "basepoint")) : 0;
    const bool boundary_form = doc.contains("cells") || doc.contains("boundaries");
    const bool presentation_form = doc.contains("vertices") || doc.contains("edges") || doc.contains("faces");
    if (boundary_form == presentation_form)
        throw SchemaError(path.empty() ? "$" : path,
                          "exactly one of the boundary form (cells, boundaries) or the presentation form "
                          "(vertices, edges, faces) is required");
    return boundary_form ? complex_from_boundaries(doc, path, std::move(name), base)
                         : complex_from_presentation(doc, path, std::move(name), base);
}

json complex_to_json(const CwComplex& x)
{
    json doc = json::object();
    doc["name"] = x.name();
    doc["basepoint"] = x.basepoint();
    doc["cells"] = x.cell_counts();
    json b = json::object();
    for (std::size_t n = 1; n <= x.dim(); ++n) b[std::to_string(n)] = write_matrix(x.boundaries()[n - 1]);
    doc["boundaries"] = std::move(b);
    return doc;
}

std::string canonical_text(const json& doc)
{
    std::string out = "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : doc.items()) {
        out += "  " + json(key).dump() + ": " + value.dump();
        out += ++i < doc.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

CwComplex complex_operand(const json& v, const std::string& path, const std::filesystem::path& base_dir)
{
    if (v.is_string()) {
        const std::filesystem::path p = base_dir / v.get<std::string>();
        try {
            return parse_complex_document(read_file(p));
        } catch (const SchemaError& e) {
            throw SchemaError(path, p.string() + ": " + e.what());
        }
    }
    return complex_from_json(v, path);
}

} // namespace

CwComplex parse_complex_document(std::string_view text)
{
    return complex_from_json(parse_json(text), "");
}

std::string serialize_complex(const CwComplex& x)
{
    return canonical_text(complex_to_json(x));
}

bool is_map_document(std::string_view text)
{
    const json doc = parse_json(text);
    return doc.is_object() && doc.contains("maps");
}

ChainMap parse_map_document(std::string_view text, const std::filesystem::path& base_dir)
{
    const json doc = parse_json(text);
    if (!doc.is_object()) throw SchemaError("$", "object expected");
    CwComplex source = complex_operand(field(doc, "source", ""), "source", base_dir);
    CwComplex target = complex_operand(field(doc, "target", ""), "target", base_dir);
    const json& mj = field(doc, "maps", "");
    if (!mj.is_object()) throw SchemaError("maps", "object keyed by dimension expected");

    const std::size_t top = std::max(source.dim(), target.dim());
    for (const auto& [key, value] : mj.items()) {
        bool known = false;
        for (std::size_t n = 0; n <= top; ++n) known = known || key == std::to_string(n);
        if (!known) throw SchemaError("maps." + key, "no such dimension");
    }
    std::vector<IntMatrix> maps;
    for (std::size_t n = 0; n <= top; ++n) {
        const int k = static_cast<int>(n);
        const std::string key = std::to_string(n);
        maps.push_back(mj.contains(key) ? read_matrix(mj[key], target.cells(k), source.cells(k), "maps." + key)
                                        : IntMatrix(target.cells(k), source.cells(k)));
    }
    return ChainMap(std::move(source), std::move(target), std::move(maps));
}

std::string serialize_map(const ChainMap& f)
{
    json doc = json::object();
    doc["source"] = complex_to_json(f.source());
    doc["target"] = complex_to_json(f.target());
    json maps = json::object();
    for (std::size_t n = 0; n < f.maps().size(); ++n) maps[std::to_string(n)] = write_matrix(f.maps()[n]);
    doc["maps"] = std::move(maps);
    return canonical_text(doc);
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError(path.string(), "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << contents;
}

CwComplex load_complex(const std::filesystem::path& path)
{
    return parse_complex_document(read_file(path));
}

ChainMap load_map(const std::filesystem::path& path)
{
    return parse_map_document(read_file(path), path.parent_path());
}

} // namespace cwcoh
