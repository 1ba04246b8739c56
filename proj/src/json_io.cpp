#include "springer/json_io.hpp"

#include <stdexcept>

namespace springer {

json to_json(const Partition& p)
{
    return json(p.parts());
}

Partition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("partition: array expected");
    return Partition(j.get<std::vector<int>>());
}

json to_json(const GroupLabel& g, const OrbitLabel& o)
{
    json j;
    j["family"] = family_name(g.family);
    if (g.classical())
        j["rank"] = g.rank;
    if (std::holds_alternative<ClassicalOrbit>(o)) {
        const auto& c = std::get<ClassicalOrbit>(o);
        j["partition"] = c.partition.parts();
        if (c.tag == VeryEvenTag::I) j["tag"] = "I";
        if (c.tag == VeryEvenTag::II) j["tag"] = "II";
    } else {
        j["bala_carter"] = std::get<ExceptionalOrbit>(o).bala_carter;
    }
    return j;
}

OrbitLabel orbit_from_json(const json& j)
{
    if (j.contains("bala_carter"))
        return ExceptionalOrbit{j.at("bala_carter").get<std::string>()};
    ClassicalOrbit c;
    c.partition = partition_from_json(j.at("partition"));
    if (j.contains("tag")) {
        auto t = j.at("tag").get<std::string>();
        if (t == "I") c.tag = VeryEvenTag::I;
        else if (t == "II") c.tag = VeryEvenTag::II;
        else throw std::invalid_argument("orbit: bad tag");
    }
    return c;
}

json to_json(const ComponentGroup& c)
{
    json inner;
    switch (c.kind) {
    case ComponentGroup::Kind::Trivial: inner = {{"kind", "trivial"}}; break;
    case ComponentGroup::Kind::Cyclic: inner = {{"kind", "cyclic"}, {"order", c.param}}; break;
    case ComponentGroup::Kind::Elem2: inner = {{"kind", "elem2"}, {"exponent", c.param}}; break;
    case ComponentGroup::Kind::Sym: inner = {{"kind", "sym"}, {"letters", c.param}}; break;
    case ComponentGroup::Kind::CentralExt2:
        inner = {{"kind", "central_ext2"}, {"exponent", c.param}};
        break;
    }
    if (c.center > 1)
        return json{{"kind", "product"}, {"center", "mu" + std::to_string(c.center)},
                    {"factor", inner}};
    return inner;
}

json to_json(const LocalSystemLabel& l)
{
    json j;
    j["orbit"] = std::holds_alternative<ClassicalOrbit>(l.orbit)
                     ? json(std::get<ClassicalOrbit>(l.orbit).partition.parts())
                     : json(std::get<ExceptionalOrbit>(l.orbit).bala_carter);
    switch (l.kind) {
    case LocalSystemLabel::Kind::CyclicCharacter:
        j["kind"] = "cyclic_character";
        j["modulus"] = l.modulus;
        j["exponent"] = l.exponent;
        break;
    case LocalSystemLabel::Kind::CentralCharacter:
        j["kind"] = "central_character";
        j["central"] = l.central;
        break;
    case LocalSystemLabel::Kind::DimTagged:
        j["kind"] = "dim_tagged";
        j["central"] = l.central;
        j["dim"] = l.dim;
        break;
    case LocalSystemLabel::Kind::SignTimesCentral:
        j["kind"] = "sign_times_central";
        j["central"] = l.central;
        break;
    }
    return j;
}

json to_json(const CuspidalDatum& d)
{
    json j;
    j["levi"] = d.levi.to_string();
    json gl = json::array();
    for (int a : d.levi.gl_sizes) gl.push_back(a);
    j["gl_sizes"] = gl;
    j["core_rank"] = d.levi.core_rank;
    json sys = json::array();
    for (const auto& s : d.factor_systems)
        sys.push_back(to_json(s));
    j["systems"] = sys;
    return j;
}

json to_json(const CuspidalSupport& s)
{
    json j;
    j["levi"] = s.levi;
    if (!s.levi_roots.empty())
        j["levi_roots"] = s.levi_roots;
    j["orbit"] = s.orbit;
    j["system"] = s.system;
    j["central_exponent"] = s.central_exponent;
    j["self"] = s.self;
    return j;
}

json to_json(const ExtendedWeylGroup& g, const ParabolicPair& p)
{
    json j;
    j["X"] = p.X;
    json omega = json::array();
    for (int t : p.omega)
        omega.push_back(g.pi0()[t]);
    j["omega"] = omega;
    return j;
}

json to_json(const LeviLabel& l)
{
    json j;
    j["X"] = l.X;
    j["omega"] = l.omega;
    j["semisimple_type"] = l.semisimple_type.empty() ? "T" : l.semisimple_type;
    return j;
}

json to_json(const ExtendedWeylGroup& g, const MackeyTerm& t)
{
    json j;
    j["theta"] = t.w.theta;
    j["length"] = g.length(t.w);
    j["levi_roots"] = t.levi_roots;
    j["parabolic_in_M"] = t.parabolic_in_M;
    j["parabolic_in_wL"] = t.parabolic_in_wL;
    j["omega"] = t.omega;
    json perm = json::array();
    for (int16_t v : t.w.perm)
        perm.push_back(v);
    j["root_permutation"] = perm;
    return j;
}

json to_json(const FiniteGroup& g)
{
    return json{{"size", g.size()}, {"table", g.table()}};
}

FiniteGroup finite_group_from_json(const json& j)
{
    if (j.contains("table"))
        return FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>());
    if (j.contains("generators"))
        return FiniteGroup::from_permutations(
            j.at("degree").get<int>(),
            j.at("generators").get<std::vector<std::vector<int>>>());
    throw std::invalid_argument("group: need table or generators");
}

json to_json(const Cocycle& k)
{
    return json{{"modulus", k.modulus}, {"table", k.table}};
}

Cocycle cocycle_from_json(const json& j)
{
    Cocycle k;
    k.modulus = j.at("modulus").get<int>();
    k.table = j.at("table").get<std::vector<std::vector<int>>>();
    return k;
}

GroupAction action_from_json(const json& j)
{
    return GroupAction::create(finite_group_from_json(j.at("group")),
                               j.at("points").get<int>(),
                               j.at("table").get<std::vector<std::vector<int>>>());
}

ExtQuotDocument extquot_document_from_json(const json& j)
{
    ExtQuotDocument doc;
    doc.action = action_from_json(j.at("action"));
    const json& d = j.at("data");
    if (d.is_string() && d.get<std::string>() == "trivial") {
        doc.data = trivial_data(doc.action);
    } else if (d.contains("basepoints")) {
        std::vector<BasepointSpec> specs;
        for (const auto& s : d.at("basepoints")) {
            BasepointSpec spec;
            spec.basepoint = s.at("basepoint").get<int>();
            spec.kappa0 = cocycle_from_json(s.at("kappa0"));
            spec.lifts = s.at("lifts").get<std::vector<int>>();
            specs.push_back(std::move(spec));
        }
        doc.data = strict_from_basepoints(doc.action, d.at("modulus").get<int>(), specs);
    } else {
        TwistedQuotientData data;
        data.modulus = d.at("modulus").get<int>();
        for (const auto& k : d.at("kappa"))
            data.kappa.push_back(cocycle_from_json(k));
        for (const auto& row : d.at("theta")) {
            std::vector<ThetaMap> r;
            for (const auto& th : row) {
                ThetaMap t;
                t.map = th.at("map").get<std::vector<int>>();
                t.corr = th.at("corr").get<std::vector<int>>();
                r.push_back(std::move(t));
            }
            data.theta.push_back(std::move(r));
        }
        data.coh_witness =
            d.at("coh_witness").get<std::vector<std::vector<std::vector<int>>>>();
        for (const auto& w : d.at("inner_witness"))
            data.inner_witness[{w.at("gamma").get<int>(), w.at("x").get<int>()}] =
                w.at("h").get<int>();
        doc.data = std::move(data);
    }
    return doc;
}

json to_json(const ExtendedQuotientPoint& p)
{
    json j;
    j["base_point"] = p.base_point;
    j["irrep"] = p.irrep;
    j["degree"] = p.degree;
    j["pair_orbit_size"] = p.pair_orbit_size;
    json sig = json::array();
    for (const auto& v : p.signature)
        sig.push_back(v.to_string());
    j["signature"] = sig;
    return j;
}

CatalogEntry catalog_entry_from_json(const json& j)
{
    CatalogEntry e;
    e.levi_id = j.at("levi").get<std::string>();
    e.lattice_rank = j.at("rank").get<int>();
    e.wm = finite_group_from_json(j.at("wm"));
    e.matrices = j.at("matrices").get<std::vector<std::vector<std::vector<int>>>>();
    e.action = j.at("action").get<std::vector<std::vector<int>>>();
    for (const auto& l : j.at("labels")) {
        CatalogLabel lab;
        lab.name = l.at("name").get<std::string>();
        if (l.contains("char_tag")) lab.char_tag = l.at("char_tag").get<std::string>();
        if (l.contains("shift_tag")) lab.shift_tag = l.at("shift_tag").get<std::string>();
        if (l.contains("isotropy")) {
            lab.isotropy.modulus = l.at("isotropy").at("modulus").get<int>();
            lab.isotropy.generators =
                l.at("isotropy").at("generators").get<std::vector<std::vector<int>>>();
        }
        if (l.contains("kappa"))
            lab.kappa = cocycle_from_json(l.at("kappa"));
        e.labels.push_back(std::move(lab));
    }
    if (j.contains("wt0"))
        e.wt0 = j.at("wt0").get<std::vector<int>>();
    return e;
}

std::vector<CatalogEntry> catalog_from_json(const json& j)
{
    std::vector<CatalogEntry> out;
    for (const auto& e : j.at("entries"))
        out.push_back(catalog_entry_from_json(e));
    return out;
}

json to_json(const Block& b)
{
    json j;
    j["key"] = b.key;
    json pts = json::array();
    for (const auto& p : b.points) {
        json q = to_json(p.point);
        q["label"] = p.label_name;
        if (!p.char_tag.empty()) q["char_tag"] = p.char_tag;
        if (!p.shift_tag.empty()) q["shift_tag"] = p.shift_tag;
        pts.push_back(std::move(q));
    }
    j["points"] = pts;
    return j;
}

namespace {

const std::pair<const char*, const char*> schemas[] = {
    {"partition", R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "partition",
  "type": "array",
  "items": {"type": "integer", "minimum": 1},
  "description": "nonincreasing parts, e.g. [3,1,1]"
})"},
    {"orbit", R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "orbit",
  "type": "object",
  "properties": {
    "family": {"enum": ["A","B","C","D","E6","E7","E8","F4","G2"]},
    "rank": {"type": "integer"},
    "partition": {"type": "array", "items": {"type": "integer"}},
    "tag": {"enum": ["I","II"]},
    "bala_carter": {"type": "string"}
  },
  "required": ["family"]
})"},
    {"group", R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "finite group",
  "type": "object",
  "oneOf": [
    {"properties": {"size": {"type": "integer"},
                    "table": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}},
     "required": ["table"]},
    {"properties": {"degree": {"type": "integer"},
                    "generators": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}},
     "required": ["degree", "generators"]}
  ],
  "description": "multiplication table (index 0 = identity) or permutation generators"
})"},
    {"cocycle", R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "cocycle",
  "type": "object",
  "properties": {
    "modulus": {"type": "integer", "minimum": 1},
    "table": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
  },
  "required": ["modulus", "table"],
  "description": "normalized 2-cocycle as exponents mod modulus"
})"},
    {"action", R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "group action",
  "type": "object",
  "properties": {
    "group": {"$ref": "group"},
    "points": {"type": "integer", "minimum": 1},
    "table": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
  },
  "required": ["group", "points", "table"]
})"},
    {"extquot", R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "twisted extended quotient input",
  "type": "object",
  "properties": {
    "action": {"$ref": "action"},
    "data": {
      "oneOf": [
        {"const": "trivial"},
        {"type": "object",
         "properties": {
           "modulus": {"type": "integer"},
           "basepoints": {"type": "array", "items": {
             "type": "object",
             "properties": {"basepoint": {"type": "integer"},
                            "kappa0": {"$ref": "cocycle"},
                            "lifts": {"type": "array", "items": {"type": "integer"}}}}}},
         "required": ["modulus", "basepoints"]},
        {"type": "object",
         "properties": {
           "modulus": {"type": "integer"},
           "kappa": {"type": "array", "items": {"$ref": "cocycle"}},
           "theta": {"type": "array", "items": {"type": "array", "items": {
             "type": "object",
             "properties": {"map": {"type": "array"}, "corr": {"type": "array"}}}}},
           "coh_witness": {"type": "array"},
           "inner_witness": {"type": "array", "items": {
             "type": "object",
             "properties": {"gamma": {"type": "integer"}, "x": {"type": "integer"},
                            "h": {"type": "integer"}}}}},
         "required": ["modulus", "kappa", "theta", "coh_witness", "inner_witness"]}
      ]
    }
  },
  "required": ["action", "data"]
})"},
    {"catalog", R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "cuspidal catalog",
  "type": "object",
  "properties": {
    "entries": {"type": "array", "items": {
      "type": "object",
      "properties": {
        "levi": {"type": "string"},
        "rank": {"type": "integer", "minimum": 0},
        "wm": {"$ref": "group"},
        "matrices": {"type": "array",
                     "items": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}},
        "action": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "labels": {"type": "array", "items": {
          "type": "object",
          "properties": {
            "name": {"type": "string"},
            "char_tag": {"type": "string"},
            "shift_tag": {"type": "string"},
            "isotropy": {"type": "object",
                         "properties": {"modulus": {"type": "integer"},
                                        "generators": {"type": "array"}}},
            "kappa": {"$ref": "cocycle"}
          },
          "required": ["name"]}},
        "wt0": {"type": "array", "items": {"type": "integer"}}
      },
      "required": ["levi", "rank", "wm", "matrices", "action", "labels"]}}
  },
  "required": ["entries"]
})"},
};

} // namespace

const char* input_schema(const std::string& name)
{
    for (const auto& [n, s] : schemas)
        if (name == n)
            return s;
    throw std::invalid_argument("unknown schema: " + name);
}

std::vector<std::string> schema_names()
{
    std::vector<std::string> out;
    for (const auto& [n, s] : schemas)
        out.push_back(n);
    return out;
}

} // namespace springer
