#include "exl/io.hpp"

#include "exl/error.hpp"

#include <fstream>
#include <sstream>

namespace exl {

namespace {

const Json& field(const Json& doc, const char* key, const std::string& where) {
    if (!doc.is_object())
        throw ParseError(where.empty() ? "/" : where, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError(where + "/" + key, "missing field");
    return *it;
}

std::size_t parse_index(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

int parse_degree(const Json& j, const std::string& where) {
    auto d = parse_index(j, where);
    if (d > 64)
        throw ParseError(where, "degree is unreasonably large");
    return static_cast<int>(d);
}

Scalar parse_coeff(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where, "expected a rational string such as \"-3/2\"");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
        throw ParseError(where, e.what());
    }
}

Json coeff_json(const Scalar& s) { return to_string(s); }

// Dense list of rational strings, parent coordinates.
SparseVector parse_coordinates(const Json& j, std::size_t dimension, const std::string& where) {
    if (!j.is_array())
        throw ParseError(where, "expected a coordinate list");
    if (j.size() != dimension)
        throw ParseError(where, "coordinate list has length " + std::to_string(j.size()) + ", expected " +
                                    std::to_string(dimension));
    SparseVector v(dimension);
    for (std::size_t i = 0; i < j.size(); ++i)
        v.set(i, parse_coeff(j[i], where + "/" + std::to_string(i)));
    return v;
}

Json coordinates_json(const SparseVector& v) {
    Json out = Json::array();
    for (const auto& s : v.to_dense())
        out.push_back(coeff_json(s));
    return out;
}

std::vector<SparseVector> parse_coordinate_list(const Json& j, std::size_t dimension, const std::string& where) {
    if (!j.is_array())
        throw ParseError(where, "expected a list of coordinate lists");
    std::vector<SparseVector> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_coordinates(j[i], dimension, where + "/" + std::to_string(i)));
    return out;
}

} // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, "cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n')
                ++line;
        throw ParseError(path + ":line " + std::to_string(line), e.what());
    }
}

void write_json_file(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << doc.dump(2) << "\n";
}

AlgebraDocument parse_algebra(const Json& doc) {
    const auto& kind = field(doc, "field", "");
    if (kind != "rational")
        throw ParseError("/field", "only \"rational\" is supported");
    const auto dim = parse_index(field(doc, "dimension", ""), "/dimension");

    const auto& basis = field(doc, "basis", "");
    if (!basis.is_array() || basis.size() != dim)
        throw ParseError("/basis", "expected " + std::to_string(dim) + " labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis[i].is_string())
            throw ParseError("/basis/" + std::to_string(i), "label must be a string");
        labels.push_back(basis[i].get<std::string>());
    }

    AlgebraDocument out;
    out.algebra = Algebra(labels);
    const auto& products = field(doc, "products", "");
    if (!products.is_array())
        throw ParseError("/products", "expected a list");
    std::vector<bool> seen(dim * dim, false);
    for (std::size_t p = 0; p < products.size(); ++p) {
        const std::string where = "/products/" + std::to_string(p);
        auto left = parse_index(field(products[p], "left", where), where + "/left");
        auto right = parse_index(field(products[p], "right", where), where + "/right");
        if (left >= dim || right >= dim)
            throw ParseError(where, "basis index out of range");
        if (seen[left * dim + right])
            throw ParseError(where, "duplicate product record");
        seen[left * dim + right] = true;
        const auto& result = field(products[p], "result", where);
        if (!result.is_array())
            throw ParseError(where + "/result", "expected a list");
        SparseVector value(dim);
        for (std::size_t r = 0; r < result.size(); ++r) {
            const std::string rw = where + "/result/" + std::to_string(r);
            auto index = parse_index(field(result[r], "index", rw), rw + "/index");
            if (index >= dim)
                throw ParseError(rw + "/index", "basis index out of range");
            value.add(index, parse_coeff(field(result[r], "coeff", rw), rw + "/coeff"));
        }
        out.algebra.set_product(left, right, std::move(value));
    }
    if (auto bad = validate_algebra(out.algebra))
        throw ParseError("/products", "not associative at (" + std::to_string(bad->i) + "," +
                                          std::to_string(bad->j) + "," + std::to_string(bad->k) + ")");

    const auto& ideal = field(doc, "ideal", "");
    out.ideal.parent = out.algebra;
    out.ideal.basis_vectors = parse_coordinate_list(field(ideal, "basis_vectors", "/ideal"), dim,
                                                    "/ideal/basis_vectors");
    if (auto bad = validate_ideal(out.ideal))
        throw ParseError("/ideal", bad->describe());

    if (auto it = doc.find("complement"); it != doc.end())
        out.complement = parse_coordinate_list(*it, dim, "/complement");
    try {
        out.split = make_split_basis(out.ideal, out.complement);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError("/complement", e.what());
    }
    return out;
}

AlgebraDocument load_algebra(const std::string& path) {
    auto doc = read_json_file(path);
    try {
        return parse_algebra(doc);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

Json serialize_algebra(const Algebra& algebra, const Ideal& ideal,
                       const std::optional<std::vector<Element>>& complement) {
    Json doc;
    doc["field"] = "rational";
    doc["dimension"] = algebra.dimension();
    doc["basis"] = algebra.labels();
    Json products = Json::array();
    for (std::size_t i = 0; i < algebra.dimension(); ++i)
        for (std::size_t j = 0; j < algebra.dimension(); ++j) {
            const auto& p = algebra.product(i, j);
            if (p.is_zero())
                continue;
            Json result = Json::array();
            for (const auto& [m, c] : p.entries())
                result.push_back({{"index", m}, {"coeff", coeff_json(c)}});
            products.push_back({{"left", i}, {"right", j}, {"result", result}});
        }
    doc["products"] = products;
    Json basis = Json::array();
    for (const auto& v : ideal.basis_vectors)
        basis.push_back(coordinates_json(v));
    doc["ideal"] = {{"basis_vectors", basis}};
    if (complement) {
        Json c = Json::array();
        for (const auto& v : *complement)
            c.push_back(coordinates_json(v));
        doc["complement"] = c;
    }
    return doc;
}

Json serialize_algebra(const AlgebraDocument& doc) {
    return serialize_algebra(doc.algebra, doc.ideal, doc.complement);
}

Element parse_element(const Json& coords, const SplitBasis& split, const std::string& where) {
    return split.to_split(parse_coordinates(coords, split.dimension(), where));
}

Json serialize_element(const Element& split_coords, const SplitBasis& split) {
    return coordinates_json(split.to_parent(split_coords));
}

Chain parse_chain(const Json& doc, const SplitBasis& split) {
    const int degree = parse_degree(field(doc, "degree", ""), "/degree");
    const auto& terms = field(doc, "terms", "");
    if (!terms.is_array())
        throw ParseError("/terms", "expected a list");
    Chain chain(degree);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string where = "/terms/" + std::to_string(t);
        auto coeff = parse_coeff(field(terms[t], "coeff", where), where + "/coeff");
        const auto& slots = field(terms[t], "slots", where);
        if (!slots.is_array() || slots.size() != static_cast<std::size_t>(degree) + 1)
            throw ParseError(where + "/slots", "expected " + std::to_string(degree + 1) + " slots");
        std::vector<Element> elements;
        for (std::size_t s = 0; s < slots.size(); ++s)
            elements.push_back(parse_element(slots[s], split, where + "/slots/" + std::to_string(s)));
        add_tensor_product(chain, elements, coeff);
    }
    return chain;
}

Json serialize_chain(const Chain& chain, const SplitBasis& split) {
    Json terms = Json::array();
    for (const auto& [t, coeff] : chain.terms()) {
        Json slots = Json::array();
        for (auto i : t)
            slots.push_back(coordinates_json(split.ordered_basis()[i]));
        terms.push_back({{"coeff", coeff_json(coeff)}, {"slots", slots}});
    }
    return {{"degree", chain.degree()}, {"terms", terms}};
}

std::vector<Element> parse_targets(const Json& doc, const SplitBasis& split) {
    const auto& list = field(doc, "targets", "");
    if (!list.is_array())
        throw ParseError("/targets", "expected a list");
    std::vector<Element> out;
    for (std::size_t i = 0; i < list.size(); ++i)
        out.push_back(parse_element(list[i], split, "/targets/" + std::to_string(i)));
    return out;
}

Json serialize_schedule(const UnitSchedule& schedule, const SplitBasis& split) {
    Json units = Json::array();
    for (std::size_t i = 0; i < schedule.units.size(); ++i) {
        Json targets = Json::array();
        for (const auto& s : schedule.targets[i])
            targets.push_back(serialize_element(s, split));
        units.push_back({{"index", i + 1}, {"element", serialize_element(schedule.units[i], split)},
                         {"targets", targets}});
    }
    return {{"units", units}};
}

UnitSchedule parse_schedule(const Json& doc, const SplitBasis& split) {
    const auto& units = field(doc, "units", "");
    if (!units.is_array())
        throw ParseError("/units", "expected a list");
    UnitSchedule schedule;
    for (std::size_t i = 0; i < units.size(); ++i) {
        const std::string where = "/units/" + std::to_string(i);
        schedule.units.push_back(parse_element(field(units[i], "element", where), split, where + "/element"));
        const auto& targets = field(units[i], "targets", where);
        if (!targets.is_array())
            throw ParseError(where + "/targets", "expected a list");
        std::vector<Element> ts;
        for (std::size_t j = 0; j < targets.size(); ++j)
            ts.push_back(parse_element(targets[j], split, where + "/targets/" + std::to_string(j)));
        schedule.targets.push_back(std::move(ts));
    }
    return schedule;
}

namespace {

Json boundary_json(const BoundaryCertificate& c, const SplitBasis& split) {
    return {{"type", "boundary"},
            {"variant", to_string(c.kind)},
            {"space", to_string(c.space)},
            {"lhs", serialize_chain(c.lhs, split)},
            {"rhs", serialize_chain(c.rhs, split)},
            {"witness", serialize_chain(c.witness, split)}};
}

BoundaryCertificate parse_boundary(const Json& doc, const SplitBasis& split) {
    BoundaryCertificate c;
    try {
        c.kind = parse_complex_kind(field(doc, "variant", "").get<std::string>());
        c.space = parse_chain_space(field(doc, "space", "").get<std::string>());
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("/variant", e.what());
    }
    c.lhs = parse_chain(field(doc, "lhs", ""), split);
    c.rhs = parse_chain(field(doc, "rhs", ""), split);
    c.witness = parse_chain(field(doc, "witness", ""), split);
    return c;
}

} // namespace

Json serialize_certificate(const AnyCertificate& cert, const SplitBasis& split) {
    if (const auto* b = std::get_if<BoundaryCertificate>(&cert))
        return boundary_json(*b, split);
    if (const auto* d = std::get_if<DescentCertificate>(&cert))
        return {{"type", "descent"},
                {"unit", serialize_element(d->unit, split)},
                {"input", serialize_chain(d->input, split)},
                {"output", serialize_chain(d->output, split)},
                {"homotopy", serialize_chain(d->homotopy, split)},
                {"defect", serialize_chain(d->defect, split)}};
    const auto& r = std::get<InverseResult>(cert);
    return {{"type", "inverse"},
            {"input", serialize_chain(r.input, split)},
            {"schedule", serialize_schedule(r.schedule, split)},
            {"mode", r.mode == InverseMode::closed_formula ? "closed-formula" : "cycle-corrected"},
            {"formula_output", serialize_chain(r.formula_output, split)},
            {"output", serialize_chain(r.output, split)},
            {"cyclic_cycle", r.cyclic_cycle},
            {"strict_boundary", serialize_chain(r.strict_boundary, split)},
            {"certificate", boundary_json(r.certificate, split)}};
}

AnyCertificate parse_certificate(const Json& doc, const SplitBasis& split) {
    const auto& type = field(doc, "type", "");
    if (type == "boundary")
        return parse_boundary(doc, split);
    if (type == "descent") {
        DescentCertificate d;
        d.unit = parse_element(field(doc, "unit", ""), split, "/unit");
        d.input = parse_chain(field(doc, "input", ""), split);
        d.output = parse_chain(field(doc, "output", ""), split);
        d.homotopy = parse_chain(field(doc, "homotopy", ""), split);
        d.defect = parse_chain(field(doc, "defect", ""), split);
        return d;
    }
    if (type == "inverse") {
        InverseResult r;
        r.input = parse_chain(field(doc, "input", ""), split);
        r.schedule = parse_schedule(field(doc, "schedule", ""), split);
        const auto& mode = field(doc, "mode", "");
        if (mode == "closed-formula")
            r.mode = InverseMode::closed_formula;
        else if (mode == "cycle-corrected")
            r.mode = InverseMode::cycle_corrected;
        else
            throw ParseError("/mode", "expected \"closed-formula\" or \"cycle-corrected\"");
        r.formula_output = parse_chain(field(doc, "formula_output", ""), split);
        r.output = parse_chain(field(doc, "output", ""), split);
        r.correction = r.output - r.formula_output;
        const auto& cc = field(doc, "cyclic_cycle", "");
        if (!cc.is_boolean())
            throw ParseError("/cyclic_cycle", "expected a boolean");
        r.cyclic_cycle = cc.get<bool>();
        r.strict_boundary = parse_chain(field(doc, "strict_boundary", ""), split);
        r.certificate = parse_boundary(field(doc, "certificate", ""), split);
        return r;
    }
    throw ParseError("/type", "unknown certificate type");
}

Json certificate_document(const AlgebraDocument& algebra, const AnyCertificate& cert) {
    return {{"algebra", serialize_algebra(algebra)}, {"certificate", serialize_certificate(cert, algebra.split)}};
}

CertificateDocument parse_certificate_document(const Json& doc) {
    CertificateDocument out;
    out.algebra = parse_algebra(field(doc, "algebra", ""));
    out.certificate = parse_certificate(field(doc, "certificate", ""), out.algebra.split);
    return out;
}

Json serialize_report(const HomologyReport& report, const SplitBasis& split) {
    Json reps = Json::array();
    for (const auto& c : report.representative_cycles)
        reps.push_back(serialize_chain(c, split));
    return {{"variant", to_string(report.kind)},
            {"space", to_string(report.space)},
            {"degree", report.degree},
            {"dimension", report.dimension},
            {"cycle_dimension", report.cycle_dimension},
            {"boundary_rank", report.boundary_rank},
            {"representatives", reps}};
}

std::string format_element(const Element& split_coords, const SplitBasis& split) {
    const auto& labels = split.adapted().labels();
    if (split_coords.is_zero())
        return "0";
    std::string out;
    for (const auto& [i, c] : split_coords.entries()) {
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        Scalar mag = abs(c);
        if (mag != 1)
            out += to_string(mag) + " ";
        out += labels[i];
    }
    return out;
}

std::string format_chain(const Chain& chain, const SplitBasis& split) {
    if (chain.is_zero())
        return "0";
    const auto& labels = split.adapted().labels();
    std::string out;
    for (const auto& [t, c] : chain.terms()) {
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        Scalar mag = abs(c);
        if (mag != 1)
            out += to_string(mag) + " ";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i)
                out += " (x) ";
            out += labels[t[i]];
        }
    }
    return out;
}

} // namespace exl
