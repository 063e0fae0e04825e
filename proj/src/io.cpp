#include "admcube/io.hpp"

namespace admcube {

void require_keys(const Json& j, const std::vector<std::string>& allowed,
                  const std::string& context) {
    if (!j.is_object()) throw Error(context + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
            throw Error(context + ": unknown key '" + it.key() + "'");
        }
    }
}

namespace {

const Json& need(const Json& j, const char* key, const std::string& context) {
    auto it = j.find(key);
    if (it == j.end()) throw Error(context + ": missing key '" + key + "'");
    return *it;
}

}  // namespace

Json ring_to_json(const Ring& r) {
    Json j;
    switch (r.kind()) {
        case RingKind::Integers: j["kind"] = "integers"; break;
        case RingKind::Rationals: j["kind"] = "rationals"; break;
        case RingKind::PrimeField:
            j["kind"] = "prime_field";
            j["modulus"] = r.modulus().get_str();
            break;
        case RingKind::IntegersMod:
            j["kind"] = "integers_mod";
            j["modulus"] = r.modulus().get_str();
            break;
    }
    return j;
}

Ring ring_from_json(const Json& j) {
    require_keys(j, {"kind", "modulus"}, "ring");
    std::string kind = need(j, "kind", "ring").get<std::string>();
    if (kind == "integers") return Ring::integers();
    if (kind == "rationals") return Ring::rationals();
    if (kind == "prime_field" || kind == "integers_mod") {
        Int m(need(j, "modulus", "ring").get<std::string>());
        return kind == "prime_field" ? Ring::prime_field(m) : Ring::integers_mod(m);
    }
    throw Error("ring: unknown kind '" + kind + "'");
}

Json matrix_to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        for (int k = 0; k < m.cols(); ++k) entries.push_back(to_string(m.at(i, k)));
    }
    j["entries"] = entries;
    return j;
}

Matrix matrix_from_json(const Ring& ring, const Json& j) {
    require_keys(j, {"rows", "cols", "entries"}, "matrix");
    int rows = need(j, "rows", "matrix").get<int>();
    int cols = need(j, "cols", "matrix").get<int>();
    const Json& entries = need(j, "entries", "matrix");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols) {
        throw Error("matrix: entries must list rows*cols strings");
    }
    Matrix m(ring, rows, cols);
    int idx = 0;
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            m.set(i, k, parse_elem(ring, entries[static_cast<std::size_t>(idx++)].get<std::string>()));
        }
    }
    return m;
}

Json module_to_json(const FPModule& m) {
    Json j;
    j["gens"] = m.gens();
    j["relations"] = matrix_to_json(m.relations());
    return j;
}

FPModule module_from_json(const Ring& ring, const Json& j) {
    require_keys(j, {"gens", "relations"}, "module");
    int gens = need(j, "gens", "module").get<int>();
    Matrix rel = matrix_from_json(ring, need(j, "relations", "module"));
    return FPModule(ring, gens, rel);
}

Json complex_to_json(const ChainComplex& c) {
    Json j;
    j["lo"] = c.lo();
    j["hi"] = c.hi();
    Json mods = Json::array(), bnds = Json::array();
    for (int k = c.lo(); k <= c.hi(); ++k) mods.push_back(module_to_json(c.module_at(k)));
    for (int k = c.lo() + 1; k <= c.hi(); ++k) bnds.push_back(matrix_to_json(c.boundary_at(k).mat()));
    j["modules"] = mods;
    j["boundaries"] = bnds;
    return j;
}

ChainComplex complex_from_json(const Ring& ring, const Json& j) {
    require_keys(j, {"lo", "hi", "modules", "boundaries"}, "complex");
    int lo = need(j, "lo", "complex").get<int>();
    int hi = need(j, "hi", "complex").get<int>();
    const Json& mods = need(j, "modules", "complex");
    const Json& bnds = need(j, "boundaries", "complex");
    if (!mods.is_array() || static_cast<int>(mods.size()) != hi - lo + 1) {
        throw Error("complex: modules must list hi-lo+1 entries");
    }
    if (!bnds.is_array() || static_cast<int>(bnds.size()) != hi - lo) {
        throw Error("complex: boundaries must list hi-lo entries");
    }
    std::vector<FPModule> modules;
    for (const Json& m : mods) modules.push_back(module_from_json(ring, m));
    std::vector<Morphism> boundaries;
    for (int i = 0; i < hi - lo; ++i) {
        Matrix m = matrix_from_json(ring, bnds[static_cast<std::size_t>(i)]);
        boundaries.emplace_back(modules[static_cast<std::size_t>(i + 1)],
                                modules[static_cast<std::size_t>(i)], m);
    }
    return ChainComplex(lo, std::move(modules), std::move(boundaries));
}

namespace {

std::vector<std::string> labels_from_json(const Json& j) {
    if (!j.is_array()) throw Error("index: expected an array of labels");
    std::vector<std::string> labels;
    for (const Json& l : j) labels.push_back(l.get<std::string>());
    return labels;
}

}  // namespace

Json cube_to_json(const Cube& x) {
    Json j;
    j["ring"] = ring_to_json(x.ring());
    j["kind"] = "cube";
    Json index = Json::array();
    for (const std::string& l : x.index().labels()) index.push_back(l);
    j["index"] = index;
    Json verts, bnds;
    const uint32_t count = 1u << x.n();
    for (uint32_t t = 0; t < count; ++t) {
        verts[x.index().subset_key(t)] = module_to_json(x.vertex(t));
    }
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < x.n(); ++p) {
            if (!(t & (1u << p))) continue;
            bnds[x.index().subset_key(t) + "|" + x.index().label(p)] =
                matrix_to_json(x.boundary(t, p).mat());
        }
    }
    j["vertices"] = verts;
    j["boundaries"] = bnds;
    return j;
}

Cube cube_from_json(const Ring& ring, const Json& j) {
    require_keys(j, {"ring", "kind", "index", "vertices", "boundaries"}, "cube");
    CubeIndex idx(labels_from_json(need(j, "index", "cube")));
    const Json& vj = need(j, "vertices", "cube");
    const Json& bj = need(j, "boundaries", "cube");
    const uint32_t count = 1u << idx.n();
    if (!vj.is_object() || vj.size() != count) {
        throw Error("cube: expected exactly 2^n vertices");
    }
    std::vector<FPModule> verts;
    for (uint32_t t = 0; t < count; ++t) {
        std::string key = idx.subset_key(t);
        auto it = vj.find(key);
        if (it == vj.end()) throw Error("cube: missing vertex '" + key + "'");
        verts.push_back(module_from_json(ring, *it));
    }
    std::map<std::pair<uint32_t, int>, Morphism> bnds;
    for (auto it = bj.begin(); it != bj.end(); ++it) {
        std::string key = it.key();
        auto bar = key.find('|');
        if (bar == std::string::npos) throw Error("cube: boundary key needs 'T|t'");
        uint32_t t_mask = idx.subset_from_key(key.substr(0, bar));
        int p = idx.pos(key.substr(bar + 1));
        if (!(t_mask & (1u << p))) throw Error("cube: boundary direction not in subset: " + key);
        Matrix m = matrix_from_json(ring, *it);
        bnds.emplace(std::make_pair(t_mask, p),
                     Morphism(verts[t_mask], verts[t_mask & ~(1u << p)], m));
    }
    return Cube(idx, ring, std::move(verts), std::move(bnds));
}

Json double_cube_to_json(const DoubleCube& x) {
    Json j;
    j["ring"] = ring_to_json(x.ring());
    j["kind"] = "double";
    Json index = Json::array();
    for (const std::string& l : x.index().labels()) index.push_back(l);
    j["index"] = index;
    Json verts, bnds;
    const int count = pow3i(x.n());
    for (int c = 0; c < count; ++c) {
        verts[double_vertex_key(x.index(), static_cast<uint32_t>(c))] =
            module_to_json(x.vertex(static_cast<uint32_t>(c)));
    }
    for (int c = 0; c < count; ++c) {
        for (int p = 0; p < x.n(); ++p) {
            if (trit_at(static_cast<uint32_t>(c), p) == 0) continue;
            bnds[double_vertex_key(x.index(), static_cast<uint32_t>(c)) + "|" +
                 x.index().label(p)] = matrix_to_json(x.boundary(static_cast<uint32_t>(c), p).mat());
        }
    }
    j["vertices"] = verts;
    j["boundaries"] = bnds;
    return j;
}

DoubleCube double_cube_from_json(const Ring& ring, const Json& j) {
    require_keys(j, {"ring", "kind", "index", "vertices", "boundaries"}, "double");
    CubeIndex idx(labels_from_json(need(j, "index", "double")));
    const Json& vj = need(j, "vertices", "double");
    const Json& bj = need(j, "boundaries", "double");
    const int count = pow3i(idx.n());
    if (!vj.is_object() || static_cast<int>(vj.size()) != count) {
        throw Error("double: expected exactly 3^n vertices");
    }
    std::vector<FPModule> verts;
    for (int c = 0; c < count; ++c) {
        std::string key = double_vertex_key(idx, static_cast<uint32_t>(c));
        auto it = vj.find(key);
        if (it == vj.end()) throw Error("double: missing vertex '" + key + "'");
        verts.push_back(module_from_json(ring, *it));
    }
    std::map<std::pair<uint32_t, int>, Morphism> bnds;
    for (auto it = bj.begin(); it != bj.end(); ++it) {
        std::string key = it.key();
        auto bar = key.find('|');
        if (bar == std::string::npos) throw Error("double: boundary key needs 'J|t'");
        uint32_t code = double_code_from_key(idx, key.substr(0, bar));
        int p = idx.pos(key.substr(bar + 1));
        int t = trit_at(code, p);
        if (t == 0) throw Error("double: boundary lowers a zero coordinate: " + key);
        Matrix m = matrix_from_json(ring, *it);
        bnds.emplace(std::make_pair(code, p),
                     Morphism(verts[code], verts[with_trit(code, p, t - 1)], m));
    }
    return DoubleCube(idx, ring, std::move(verts), std::move(bnds));
}

Json adjugate_to_json(const CubeIndex& idx, const CubeAdjugate& a) {
    Json j;
    Json scalars;
    for (int i = 0; i < idx.n(); ++i) {
        scalars[idx.label(i)] = to_string(a.scalars[static_cast<std::size_t>(i)]);
    }
    Json stars;
    for (const auto& [key, morph] : a.stars) {
        stars[idx.subset_key(key.first) + "|" + idx.label(key.second)] =
            matrix_to_json(morph.mat());
    }
    j["scalars"] = scalars;
    j["stars"] = stars;
    return j;
}

CubeAdjugate adjugate_from_json(const Cube& x, const Json& j) {
    require_keys(j, {"scalars", "stars"}, "adjugate");
    const Json& sj = need(j, "scalars", "adjugate");
    const Json& tj = need(j, "stars", "adjugate");
    CubeAdjugate a;
    for (int i = 0; i < x.n(); ++i) {
        auto it = sj.find(x.index().label(i));
        if (it == sj.end()) throw Error("adjugate: missing scalar for " + x.index().label(i));
        a.scalars.push_back(parse_elem(x.ring(), it->get<std::string>()));
    }
    for (auto it = tj.begin(); it != tj.end(); ++it) {
        std::string key = it.key();
        auto bar = key.find('|');
        if (bar == std::string::npos) throw Error("adjugate: star key needs 'T|t'");
        uint32_t t_mask = x.index().subset_from_key(key.substr(0, bar));
        int p = x.index().pos(key.substr(bar + 1));
        if (!(t_mask & (1u << p))) throw Error("adjugate: star direction not in subset: " + key);
        Matrix m = matrix_from_json(x.ring(), *it);
        a.stars.emplace(std::make_pair(t_mask, p),
                        Morphism(x.vertex(t_mask & ~(1u << p)), x.vertex(t_mask), m));
    }
    return a;
}

Instance parse_instance(const Json& j) {
    if (!j.is_object()) throw Error("instance: expected an object");
    std::string kind = need(j, "kind", "instance").get<std::string>();
    static const std::vector<std::string> kinds{"cube",    "double",          "complex",
                                                "lattice", "family",          "adjugate-bundle",
                                                "be-complex", "koszul"};
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
        throw Error("instance: unknown kind '" + kind + "'");
    }
    Ring ring = Ring::integers();
    if (kind != "lattice") {
        ring = ring_from_json(need(j, "ring", "instance"));
    }
    return Instance{ring, kind, j};
}

std::string digest_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace admcube
