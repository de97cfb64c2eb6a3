#include "tropcount_io/json_io.hpp"

#include <tropcount/errors.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tropcount::io {

using nlohmann::json;

namespace {

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& message) const {
        throw ParseError(source_ + ": field '" + field + "': " + message);
    }

    json parse(std::string_view text) const {
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            std::size_t line = 1;
            std::size_t column = 1;
            for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
                if (text[i] == '\n') {
                    ++line;
                    column = 1;
                } else {
                    ++column;
                }
            }
            throw ParseError(source_ + ":" + std::to_string(line) + ":" + std::to_string(column) +
                             ": invalid JSON");
        }
    }

    const json& member(const json& obj, const std::string& path, const char* key) const {
        if (!obj.is_object()) fail(path, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) fail(join(path, key), "missing");
        return *it;
    }

    const json* optional_member(const json& obj, const char* key) const {
        auto it = obj.find(key);
        return it == obj.end() ? nullptr : &*it;
    }

    std::int64_t integer(const json& v, const std::string& path) const {
        if (!v.is_number_integer()) fail(path, "expected an integer");
        return v.get<std::int64_t>();
    }

    std::uint32_t natural(const json& v, const std::string& path, std::int64_t min = 0) const {
        const auto n = integer(v, path);
        if (n < min || n > std::numeric_limits<std::uint32_t>::max())
            fail(path, "expected an integer >= " + std::to_string(min));
        return static_cast<std::uint32_t>(n);
    }

    const json& array(const json& v, const std::string& path) const {
        if (!v.is_array()) fail(path, "expected an array");
        return v;
    }

    template <std::size_t N>
    std::array<std::uint32_t, N> label_tuple(const json& v, const std::string& path) const {
        array(v, path);
        if (v.size() != N) fail(path, "expected " + std::to_string(N) + " labels");
        std::array<std::uint32_t, N> out{};
        for (std::size_t i = 0; i < N; ++i) out[i] = natural(v[i], index(path, i), 1);
        return out;
    }

    Vec2 vec(const json& v, const std::string& path) const {
        array(v, path);
        if (v.size() != 2) fail(path, "expected [x, y]");
        return {integer(v[0], index(path, 0)), integer(v[1], index(path, 1))};
    }

    void schema(const json& doc, std::string_view expected) const {
        const json& s = member(doc, "", "schema");
        if (!s.is_string() || s.get<std::string>() != expected)
            fail("schema", "expected \"" + std::string(expected) + "\"");
    }

    static std::string join(const std::string& path, const char* key) {
        return path.empty() ? std::string(key) : path + "." + key;
    }
    static std::string index(const std::string& path, std::size_t i) {
        return path + "[" + std::to_string(i) + "]";
    }

    const std::string& source() const { return source_; }

private:
    std::string source_;
};

// Re-throws library validation errors with the source name attached.
template <class F>
auto with_source(const std::string& source, F&& build) {
    try {
        return build();
    } catch (const StructuralError& e) {
        throw ParseError(source + ": " + e.what());
    }
}

MapCondition read_condition(const Reader& r, const json& v, const std::string& path) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "point") return MapCondition::point();
        if (s == "free") return MapCondition::free();
        if (s == "L10" || s == "L01" || s == "L1-1") return MapCondition::degenerated(s.substr(1));
        r.fail(path, "unknown condition \"" + s + "\"");
    }
    if (!v.is_object()) r.fail(path, "expected a condition string or object");
    const json& type = r.member(v, path, "type");
    if (!type.is_string() || type.get<std::string>() != "line")
        r.fail(Reader::join(path, "type"), "expected \"line\"");
    const Vec2 normal = r.vec(r.member(v, path, "normal"), Reader::join(path, "normal"));
    std::uint32_t weight = 1;
    if (const json* w = r.optional_member(v, "weight"))
        weight = r.natural(*w, Reader::join(path, "weight"), 1);
    return MapCondition::line(normal, weight);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Instance parse_instance(std::string_view text, const std::string& source) {
    const Reader r(source);
    const json doc = r.parse(text);
    r.schema(doc, instance_schema);

    InstanceSpec spec;
    spec.degree = r.natural(r.member(doc, "", "degree"), "degree");
    if (const json* points = r.optional_member(doc, "points")) {
        r.array(*points, "points");
        for (std::size_t i = 0; i < points->size(); ++i)
            spec.points.push_back(r.natural((*points)[i], Reader::index("points", i), 1));
    }
    if (const json* lines = r.optional_member(doc, "lines")) {
        r.array(*lines, "lines");
        for (std::size_t i = 0; i < lines->size(); ++i) {
            const std::string path = Reader::index("lines", i);
            const json& entry = (*lines)[i];
            const auto label = r.natural(r.member(entry, path, "label"), path + ".label", 1);
            std::uint32_t weight = 1;
            if (const json* w = r.optional_member(entry, "weight"))
                weight = r.natural(*w, path + ".weight", 1);
            spec.lines.emplace_back(label, weight);
        }
    }
    if (const json* free = r.optional_member(doc, "free")) {
        r.array(*free, "free");
        for (std::size_t i = 0; i < free->size(); ++i)
            spec.free.push_back(r.natural((*free)[i], Reader::index("free", i), 1));
    }
    if (const json* crs = r.optional_member(doc, "crossratios")) {
        r.array(*crs, "crossratios");
        for (std::size_t i = 0; i < crs->size(); ++i)
            spec.crossratios.push_back(
                r.label_tuple<4>((*crs)[i], Reader::index("crossratios", i)));
    }
    return with_source(source, [&] { return make_instance(spec); });
}

VertexProfile parse_profile(std::string_view text, const std::string& source) {
    const Reader r(source);
    const json doc = r.parse(text);
    r.schema(doc, profile_schema);

    std::vector<Slot> slots;
    const json& slot_list = r.array(r.member(doc, "", "slots"), "slots");
    for (std::size_t i = 0; i < slot_list.size(); ++i)
        slots.push_back(r.natural(slot_list[i], Reader::index("slots", i), 1));

    std::vector<Quadruple> quads;
    if (const json* list = r.optional_member(doc, "crossratios")) {
        r.array(*list, "crossratios");
        for (std::size_t i = 0; i < list->size(); ++i) {
            const std::string path = Reader::index("crossratios", i);
            const json& entry = (*list)[i];
            Quadruple q;
            q.id = static_cast<CrossRatioId>(i + 1);
            if (const json* id = r.optional_member(entry, "id")) q.id = r.natural(*id, path + ".id", 1);
            const auto at = r.label_tuple<4>(r.member(entry, path, "slots"), path + ".slots");
            std::ranges::copy(at, q.slots.begin());
            auto labels = at;
            if (const json* e = r.optional_member(entry, "entries"))
                labels = r.label_tuple<4>(*e, path + ".entries");
            for (std::size_t k = 0; k < 4; ++k) q.entries[k] = label(labels[k]);
            if (const json* p = r.optional_member(entry, "pairing")) {
                r.array(*p, path + ".pairing");
                if (p->size() != 2) r.fail(path + ".pairing", "expected [[a1, a2], [b1, b2]]");
                const auto a = r.label_tuple<2>((*p)[0], path + ".pairing[0]");
                const auto b = r.label_tuple<2>((*p)[1], path + ".pairing[1]");
                q.pairing = with_source(source, [&] {
                    return Pairing(label(a[0]), label(a[1]), label(b[0]), label(b[1]));
                });
            }
            quads.push_back(q);
        }
    }
    return with_source(source, [&] { return VertexProfile(slots, quads); });
}

StableMap parse_map(std::string_view text, const std::string& source) {
    const Reader r(source);
    const json doc = r.parse(text);
    r.schema(doc, map_schema);

    const auto vertices = r.natural(r.member(doc, "", "vertices"), "vertices", 1);

    std::vector<MapEdge> edges;
    if (const json* list = r.optional_member(doc, "edges")) {
        r.array(*list, "edges");
        for (std::size_t i = 0; i < list->size(); ++i) {
            const std::string path = Reader::index("edges", i);
            const json& entry = (*list)[i];
            MapEdge e;
            if (const json* name = r.optional_member(entry, "name")) {
                if (!name->is_string()) r.fail(path + ".name", "expected a string");
                e.name = name->get<std::string>();
            }
            e.from = r.natural(r.member(entry, path, "from"), path + ".from");
            e.to = r.natural(r.member(entry, path, "to"), path + ".to");
            e.direction = r.vec(r.member(entry, path, "direction"), path + ".direction");
            if (const json* w = r.optional_member(entry, "weight"))
                e.weight = r.natural(*w, path + ".weight", 1);
            edges.push_back(std::move(e));
        }
    }

    std::vector<MapEnd> ends;
    const json& end_list = r.array(r.member(doc, "", "ends"), "ends");
    for (std::size_t i = 0; i < end_list.size(); ++i) {
        const std::string path = Reader::index("ends", i);
        const json& entry = end_list[i];
        MapEnd end;
        if (const json* l = r.optional_member(entry, "label"))
            end.label = label(r.natural(*l, path + ".label", 1));
        end.vertex = r.natural(r.member(entry, path, "vertex"), path + ".vertex");
        if (const json* d = r.optional_member(entry, "direction"))
            end.direction = r.vec(*d, path + ".direction");
        if (const json* c = r.optional_member(entry, "condition"))
            end.condition = read_condition(r, *c, path + ".condition");
        ends.push_back(std::move(end));
    }

    std::optional<Label> base;
    if (const json* b = r.optional_member(doc, "base")) base = label(r.natural(*b, "base", 1));

    std::vector<CrossRatio> crs;
    if (const json* list = r.optional_member(doc, "crossratios")) {
        r.array(*list, "crossratios");
        for (std::size_t i = 0; i < list->size(); ++i) {
            const auto t = r.label_tuple<4>((*list)[i], Reader::index("crossratios", i));
            crs.push_back(with_source(source, [&] {
                return CrossRatio(label(t[0]), label(t[1]), label(t[2]), label(t[3]));
            }));
        }
    }

    std::vector<Pairing> lengths;
    if (const json* list = r.optional_member(doc, "length_conditions")) {
        r.array(*list, "length_conditions");
        for (std::size_t i = 0; i < list->size(); ++i) {
            const std::string path = Reader::index("length_conditions", i);
            const json& p = r.array((*list)[i], path);
            if (p.size() != 2) r.fail(path, "expected [[a1, a2], [b1, b2]]");
            const auto a = r.label_tuple<2>(p[0], path + "[0]");
            const auto b = r.label_tuple<2>(p[1], path + "[1]");
            lengths.push_back(with_source(source, [&] {
                return Pairing(label(a[0]), label(a[1]), label(b[0]), label(b[1]));
            }));
        }
    }

    return with_source(source, [&] {
        return StableMap(vertices, std::move(edges), std::move(ends), base, std::move(crs),
                         std::move(lengths));
    });
}

Instance load_instance(const std::filesystem::path& path) {
    return parse_instance(read_file(path), path.string());
}

VertexProfile load_profile(const std::filesystem::path& path) {
    return parse_profile(read_file(path), path.string());
}

StableMap load_map(const std::filesystem::path& path) {
    return parse_map(read_file(path), path.string());
}

std::string write_instance(const Instance& inst) {
    json doc;
    doc["schema"] = instance_schema;
    doc["degree"] = inst.degree();
    doc["points"] = json::array();
    doc["lines"] = json::array();
    doc["free"] = json::array();
    for (Label l : inst.points()) doc["points"].push_back(id_of(l));
    for (Label l : inst.lines())
        doc["lines"].push_back({{"label", id_of(l)}, {"weight", inst.condition(l)->weight}});
    for (Label l : inst.free_ends()) doc["free"].push_back(id_of(l));
    doc["crossratios"] = json::array();
    for (const CrossRatio& cr : inst.crossratios()) {
        json entry = json::array();
        for (Label l : cr.entries()) entry.push_back(id_of(l));
        doc["crossratios"].push_back(entry);
    }
    return doc.dump() + "\n";
}

}  // namespace tropcount::io
