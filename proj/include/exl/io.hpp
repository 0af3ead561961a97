#ifndef EXL_IO_HPP
#define EXL_IO_HPP

#include "exl/excision.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace exl {

using Json = nlohmann::json;

/// Everything an algebra file describes. `split` is derived and validated.
struct AlgebraDocument {
    Algebra algebra;
    Ideal ideal;
    std::optional<std::vector<Element>> complement;
    SplitBasis split;
};

/// Reads a JSON file; syntax errors become ParseError("line N", ...).
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

AlgebraDocument parse_algebra(const Json& doc);
AlgebraDocument load_algebra(const std::string& path);
Json serialize_algebra(const Algebra& algebra, const Ideal& ideal,
                       const std::optional<std::vector<Element>>& complement = std::nullopt);
Json serialize_algebra(const AlgebraDocument& doc);

/// Elements are written in parent coordinates and held in split coordinates.
Element parse_element(const Json& coords, const SplitBasis& split, const std::string& where = "");
Json serialize_element(const Element& split_coords, const SplitBasis& split);

/// {"degree": n, "terms": [{"coeff": "p/q", "slots": [coords, ...]}, ...]}
Chain parse_chain(const Json& doc, const SplitBasis& split);
Json serialize_chain(const Chain& chain, const SplitBasis& split);

/// {"targets": [coords, ...]}
std::vector<Element> parse_targets(const Json& doc, const SplitBasis& split);

Json serialize_schedule(const UnitSchedule& schedule, const SplitBasis& split);
UnitSchedule parse_schedule(const Json& doc, const SplitBasis& split);

using AnyCertificate = std::variant<BoundaryCertificate, DescentCertificate, InverseResult>;

Json serialize_certificate(const AnyCertificate& cert, const SplitBasis& split);
AnyCertificate parse_certificate(const Json& doc, const SplitBasis& split);

/// Self-contained certificate file: the algebra document plus the certificate.
struct CertificateDocument {
    AlgebraDocument algebra;
    AnyCertificate certificate;
};
Json certificate_document(const AlgebraDocument& algebra, const AnyCertificate& cert);
CertificateDocument parse_certificate_document(const Json& doc);

Json serialize_report(const HomologyReport& report, const SplitBasis& split);

/// Human-readable chain, e.g. "E11 (x) E22 - 1/2 E12 (x) E22".
std::string format_chain(const Chain& chain, const SplitBasis& split);
std::string format_element(const Element& split_coords, const SplitBasis& split);

} // namespace exl

#endif
