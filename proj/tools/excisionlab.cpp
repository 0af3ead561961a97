#include "exl/certificate.hpp"
#include "exl/demo.hpp"
#include "exl/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>

using namespace exl;

namespace {

enum Exit : int {
    exit_ok = 0,
    exit_unverified = 1,
    exit_usage = 2,
    exit_no_local_unit = 3,
    exit_certificate_search = 4,
    exit_resource_limit = 5,
};

struct Run {
    std::string command;
    bool structured = false;
    Json report = Json::object();
    std::vector<std::string> text;
    bool all_verified = true;
    int exit_code = exit_ok;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void line(std::string s) { text.push_back(std::move(s)); }

    void verdict(const std::string& what, const Verdict& v, const SplitBasis& split) {
        Json entry = {{"certificate", what}, {"ok", v.ok()}};
        if (!v.ok()) {
            all_verified = false;
            entry["reason"] = v.mismatch->reason;
            entry["residual"] = serialize_chain(v.mismatch->residual, split);
            line("verify " + what + ": MISMATCH (" + v.mismatch->reason + ")");
            if (!v.mismatch->residual.is_zero())
                line("  residual: " + format_chain(v.mismatch->residual, split));
        } else {
            line("verify " + what + ": ok");
        }
        report["verdicts"].push_back(entry);
    }

    int finish() {
        if (exit_code == exit_ok && !all_verified)
            exit_code = exit_unverified;
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (structured) {
            report["command"] = command;
            report["exit_code"] = exit_code;
            report["elapsed_seconds"] = elapsed;
            std::cout << report.dump(2) << "\n";
        } else {
            for (const auto& l : text)
                std::cout << l << "\n";
        }
        return exit_code;
    }
};

Json no_unit_json(const NoLocalUnit& bad, const SplitBasis& split) {
    Json targets = Json::array();
    for (const auto& t : bad.targets)
        targets.push_back(serialize_element(t, split));
    Json row = Json::array();
    for (const auto& [i, c] : bad.witness.witness.entries())
        row.push_back({{"index", i}, {"coeff", to_string(c)}});
    return {{"level", bad.level}, {"targets", targets}, {"witness_row", row}, {"message", bad.describe()}};
}

void report_no_unit(Run& run, const NoLocalUnit& bad, const SplitBasis& split) {
    run.exit_code = exit_no_local_unit;
    run.report["no_local_unit"] = no_unit_json(bad, split);
    run.line("no local left unit: " + bad.describe());
    for (const auto& t : bad.targets)
        run.line("  target: " + format_element(t, split));
}

void report_inverse(Run& run, const InverseResult& r, const SplitBasis& split, const std::string& label) {
    run.line(label + " input  phi = " + format_chain(r.input, split));
    for (std::size_t i = 1; i <= r.schedule.degree(); ++i)
        run.line("  e_" + std::to_string(i) + " = " + format_element(r.schedule.unit(i), split));
    run.line("  closed formula = " + format_chain(r.formula_output, split));
    if (!r.correction.is_zero())
        run.line("  cycle correction = " + format_chain(r.correction, split));
    run.line("  psi = " + format_chain(r.output, split));
    run.line(std::string("  psi is a cycle in CC(I): ") + (r.cyclic_cycle ? "yes" : "no") +
             ", strict b(psi) = " + format_chain(r.strict_boundary, split));
    run.line("  witness eta = " + format_chain(r.certificate.witness, split));
    run.report["results"].push_back(serialize_certificate(r, split));
    run.verdict(label, verify_certificate(split, r), split);
}

Chain load_chain(const std::string& path, const SplitBasis& split) {
    auto doc = read_json_file(path);
    try {
        return parse_chain(doc, split);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

std::vector<CyclicChain> canonical_classes(const std::vector<Chain>& reps) {
    std::vector<CyclicChain> out;
    for (const auto& c : reps)
        out.push_back(canonicalize_cyclic(c));
    return out;
}

void run_homology(Run& run, const std::string& algebra, const std::string& variant, const std::string& space,
                  int degree) {
    auto doc = load_algebra(algebra);
    auto report = homology(doc.split, parse_complex_kind(variant), parse_chain_space(space), degree);
    run.report["homology"] = serialize_report(report, doc.split);
    run.line(to_string(report.kind) + "_" + std::to_string(degree) + "(" + to_string(report.space) +
             ") = " + std::to_string(report.dimension));
    run.line("  chains " + std::to_string(ChainBasis(doc.split, report.kind, report.space, degree).size()) +
             ", cycles " + std::to_string(report.cycle_dimension) + ", boundaries " +
             std::to_string(report.boundary_rank));
    for (const auto& c : report.representative_cycles)
        run.line("  class: " + format_chain(c, doc.split));
}

void run_excise_inverse(Run& run, const std::string& algebra, const std::string& chain_file, int degree,
                        const std::string& emit, bool formula_only) {
    auto doc = load_algebra(algebra);
    auto chain = load_chain(chain_file, doc.split);
    if (chain.degree() != degree)
        throw ParseError(chain_file + ":/degree", "chain has degree " + std::to_string(chain.degree()) +
                                                      ", expected " + std::to_string(degree));
    auto mode = formula_only ? InverseMode::closed_formula : InverseMode::cycle_corrected;
    auto res = inverse_excision_class(doc.split, {canonicalize_cyclic(chain)}, mode);
    if (auto* bad = std::get_if<NoLocalUnit>(&res))
        return report_no_unit(run, *bad, doc.split);
    const auto& r = std::get<std::vector<InverseResult>>(res).front();
    report_inverse(run, r, doc.split, "inverse");
    if (!emit.empty()) {
        if (!run.all_verified)
            throw Error("refusing to emit a certificate that does not verify");
        write_json_file(emit, certificate_document(doc, r));
        run.report["emitted"] = emit;
        run.line("certificate written to " + emit);
    }
}

void run_descend(Run& run, const std::string& algebra, const std::string& chain_file, const std::string& unit,
                 const std::string& emit) {
    auto doc = load_algebra(algebra);
    auto phi = load_chain(chain_file, doc.split);
    if (filtration_level(doc.split, phi) > phi.degree())
        throw Error("descend: an initial slot lies outside the ideal (rotate the chain into F_n first)");
    Element e;
    if (unit == "auto") {
        auto found = initial_slot_unit(doc.split, phi);
        if (auto* bad = std::get_if<NoLocalUnit>(&found))
            return report_no_unit(run, *bad, doc.split);
        e = std::get<Element>(found);
    } else {
        auto j = read_json_file(unit);
        e = parse_element(j.is_object() ? j.at("element") : j, doc.split, unit);
    }
    DescentCertificate cert;
    try {
        cert = descent_step(doc.split, phi, e);
    } catch (const DescentPreconditionError& err) {
        run.exit_code = exit_no_local_unit;
        run.report["precondition_residual"] = serialize_chain(err.residual(), doc.split);
        run.line(err.what());
        run.line("  residual: " + format_chain(err.residual(), doc.split));
        return;
    }
    run.line("unit e = " + format_element(cert.unit, doc.split));
    run.line("phi  (F level " + std::to_string(filtration_level(doc.split, phi)) + ") = " +
             format_chain(phi, doc.split));
    run.line("phi' (F level " + std::to_string(filtration_level(doc.split, cert.output)) + ") = " +
             format_chain(cert.output, doc.split));
    run.line("G = " + format_chain(cert.homotopy, doc.split));
    run.line("e (x) b(phi) = " + format_chain(cert.defect, doc.split));
    run.report["descent"] = serialize_certificate(cert, doc.split);
    run.verdict("descent", verify_certificate(doc.split, cert), doc.split);
    if (!emit.empty() && run.all_verified) {
        write_json_file(emit, certificate_document(doc, cert));
        run.report["emitted"] = emit;
        run.line("certificate written to " + emit);
    }
}

void run_verify(Run& run, const std::string& file) {
    auto parsed = [&] {
        auto j = read_json_file(file);
        try {
            return parse_certificate_document(j);
        } catch (const ParseError& e) {
            throw ParseError(file + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
        }
    }();
    const auto& split = parsed.algebra.split;
    std::visit(
        [&](const auto& cert) {
            using T = std::decay_t<decltype(cert)>;
            const char* kind = std::is_same_v<T, BoundaryCertificate>  ? "boundary"
                               : std::is_same_v<T, DescentCertificate> ? "descent"
                                                                        : "inverse";
            run.verdict(kind, verify_certificate(split, cert), split);
        },
        parsed.certificate);
}

void run_local_unit(Run& run, const std::string& algebra, const std::string& targets_file) {
    auto doc = load_algebra(algebra);
    auto targets = parse_targets(read_json_file(targets_file), doc.split);
    auto found = find_local_left_unit(doc.split, targets);
    if (auto* bad = std::get_if<NoLocalUnit>(&found))
        return report_no_unit(run, *bad, doc.split);
    const auto& e = std::get<Element>(found);
    run.report["unit"] = serialize_element(e, doc.split);
    run.line("e = " + format_element(e, doc.split));
}

void run_demo(Run& run, const std::string& name, int degree, const std::string& export_algebra,
              const std::string& emit_dir) {
    const auto& demo = demo_extension(name);
    AlgebraDocument doc{demo.algebra, demo.ideal, std::nullopt, make_split_basis(demo.ideal)};
    const auto& split = doc.split;
    run.line(demo.name + ": " + demo.documentation);
    run.report["demo"] = demo.name;
    if (!export_algebra.empty()) {
        write_json_file(export_algebra, serialize_algebra(doc));
        run.line("algebra written to " + export_algebra);
    }

    auto hi = homology(split, ComplexKind::cyclic, ChainSpace::ideal, degree);
    auto hr = homology(split, ComplexKind::cyclic, ChainSpace::relative, degree);
    run.report["HC_I"] = serialize_report(hi, split);
    run.report["HC_relative"] = serialize_report(hr, split);
    const std::string n = std::to_string(degree);
    run.line("dim HC_" + n + "(I) = " + std::to_string(hi.dimension) + ", dim HC_" + n +
             "(A,I) = " + std::to_string(hr.dimension));
    if (hi.dimension != hr.dimension) {
        run.all_verified = false;
        run.line("dimensions differ");
    }

    int emitted = 0;
    auto emit = [&](const InverseResult& r) {
        if (emit_dir.empty())
            return;
        std::filesystem::create_directories(emit_dir);
        auto path = (std::filesystem::path(emit_dir) /
                     (demo.name + "-n" + n + "-" + std::to_string(emitted++) + ".json"))
                        .string();
        write_json_file(path, certificate_document(doc, r));
    };

    auto relative = inverse_excision_class(split, canonical_classes(hr.representative_cycles));
    if (auto* bad = std::get_if<NoLocalUnit>(&relative))
        return report_no_unit(run, *bad, split);
    for (const auto& r : std::get<std::vector<InverseResult>>(relative)) {
        report_inverse(run, r, split, "HC_" + n + "(A,I) class");
        emit(r);
    }

    auto from_ideal = inverse_excision_class(split, canonical_classes(hi.representative_cycles));
    if (auto* bad = std::get_if<NoLocalUnit>(&from_ideal))
        return report_no_unit(run, *bad, split);
    const auto& back = std::get<std::vector<InverseResult>>(from_ideal);
    for (std::size_t k = 0; k < back.size(); ++k) {
        const auto& r = back[k];
        report_inverse(run, r, split, "rho of HC_" + n + "(I) class");
        emit(r);
        auto round = find_boundary_certificate(split, ComplexKind::cyclic, ChainSpace::ideal, r.output,
                                               hi.representative_cycles[k]);
        if (auto* cert = std::get_if<BoundaryCertificate>(&round))
            run.verdict("round trip in CC(I)", verify_certificate(split, *cert), split);
        else {
            run.all_verified = false;
            run.line("round trip in CC(I): no certificate");
        }
    }
    run.line(run.all_verified ? "all certificates verified" : "VERIFICATION FAILED");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hochschild and cyclic homology of finite-dimensional algebras, with an explicit "
                 "inverse of the excision map for ideals with local left units."};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "structured"}));

    std::string algebra, chain, variant = "hc", space = "relative", unit = "auto", targets, certificate, emit,
                                    name, export_algebra, emit_dir;
    int degree = 0;
    bool formula_only = false;

    auto* homology_cmd = app.add_subcommand("homology", "homology dimension and representative cycles");
    homology_cmd->add_option("--algebra", algebra)->required();
    homology_cmd->add_option("--variant", variant)->check(CLI::IsMember({"hh", "hc", "bar"}));
    homology_cmd->add_option("--space", space)->check(CLI::IsMember({"A", "I", "relative"}));
    homology_cmd->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);

    auto* inverse_cmd = app.add_subcommand("excise-inverse", "explicit inverse of excision on one class");
    inverse_cmd->add_option("--algebra", algebra)->required();
    inverse_cmd->add_option("--chain", chain)->required();
    inverse_cmd->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
    inverse_cmd->add_option("--emit-certificate", emit, "write the verified result here");
    inverse_cmd->add_flag("--formula-only", formula_only, "use the bare closed formula, without the cycle correction");

    auto* descend_cmd = app.add_subcommand("descend", "one descent step with its homotopy");
    descend_cmd->add_option("--algebra", algebra)->required();
    descend_cmd->add_option("--chain", chain)->required();
    descend_cmd->add_option("--unit", unit, "auto, or a file holding a coordinate list");
    descend_cmd->add_option("--emit-certificate", emit);

    auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate file");
    verify_cmd->add_option("--certificate", certificate)->required();

    auto* unit_cmd = app.add_subcommand("local-unit", "solve e*s = s for the given targets");
    unit_cmd->add_option("--algebra", algebra)->required();
    unit_cmd->add_option("--targets", targets)->required();

    auto* demo_cmd = app.add_subcommand("demo", "excision round trip on a built-in extension");
    demo_cmd->add_option("--name", name)->required()->check(CLI::IsMember({"t2-corner", "matrix2", "direct-sum"}));
    demo_cmd->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
    demo_cmd->add_option("--export-algebra", export_algebra, "write the algebra file");
    demo_cmd->add_option("--emit-certificates", emit_dir, "directory for certificate files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    Run run;
    for (int i = 0; i < argc; ++i)
        run.command += (i ? " " : "") + std::string(argv[i]);
    run.structured = format == "structured";
    run.report["verdicts"] = Json::array();

    try {
        if (*homology_cmd)
            run_homology(run, algebra, variant, space, degree);
        else if (*inverse_cmd)
            run_excise_inverse(run, algebra, chain, degree, emit, formula_only);
        else if (*descend_cmd)
            run_descend(run, algebra, chain, unit, emit);
        else if (*verify_cmd)
            run_verify(run, certificate);
        else if (*unit_cmd)
            run_local_unit(run, algebra, targets);
        else if (*demo_cmd)
            run_demo(run, name, degree, export_algebra, emit_dir);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource_limit;
    } catch (const CertificateSearchFailure& e) {
        std::cerr << "certificate search failed: " << e.what() << "\n" << e.system_dump();
        return exit_certificate_search;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return run.finish();
}
