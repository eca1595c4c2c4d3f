#include "sally/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sally/errors.hpp"
#include "sally/ring_lang.hpp"
#include "sally/theorem_lab.hpp"

namespace sally::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string format = "text";
    std::string backend = "openmp";
    std::optional<unsigned> horizon;
    unsigned reduction_cap = 0;
    unsigned rr_cap = 10;
    unsigned max_horizon = 24;

    Backend kernel() const { return backend == "serial" ? Backend::serial : Backend::openmp; }
    bool json() const { return format == "json"; }
    LabOptions lab() const {
        LabOptions o;
        o.analysis.horizon = horizon;
        o.analysis.reduction_cap = reduction_cap;
        o.analysis.max_horizon = std::max(max_horizon, horizon.value_or(0));
        o.ratliff_rush_cap = rr_cap;
        return o;
    }
};

/// Parse error tagged with the file it came from.
struct FileParseError {
    std::string path;
    ParseError error;
};

NamedInstance load_file(const std::string& path, Backend backend) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string name = std::filesystem::path(path).stem().string();
    try {
        return to_instance(parse_source(buf.str(), backend), name);
    } catch (const ParseError& e) {
        throw FileParseError{path, e};
    }
}

/// Re-reads an instance through its textual form, on the chosen backend.
NamedInstance through_text(const NamedInstance& inst, Backend backend) {
    return to_instance(parse_source(serialize(inst), backend), inst.name);
}

std::string sanitize(const std::string& name) {
    std::string s;
    for (char c : name) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    while (s.find("__") != std::string::npos) s.replace(s.find("__"), 2, "_");
    while (!s.empty() && s.back() == '_') s.pop_back();
    return s;
}

Json report_json(const std::string& name, const VerificationReport& report) {
    Json claims = Json::array();
    for (const Claim& c : report.claims)
        claims.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"witness", c.witness}});
    return {{"instance", name}, {"claims", claims}, {"inputs", report.inputs}};
}

void print_report(std::ostream& out, const std::string& name, const VerificationReport& report) {
    out << "== " << name << "\n";
    out << "inputs: " << report.inputs << "\n";
    std::map<ClaimStatus, int> counts;
    for (const Claim& c : report.claims) {
        out << std::left << std::setw(15) << to_string(c.status) << std::setw(32) << c.id << " " << c.witness << "\n";
        ++counts[c.status];
    }
    out << name << ": " << counts[ClaimStatus::pass] << " pass, " << counts[ClaimStatus::fail] << " fail, "
        << counts[ClaimStatus::not_applicable] << " not-applicable, " << counts[ClaimStatus::skipped] << " skipped\n";
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

int cmd_invariants(const NamedInstance& inst, const Settings& cfg, std::ostream& out) {
    Workbench bench(inst, cfg.lab());
    const PairAnalysis& a = bench.analysis();
    const RatliffRushResult& rr = bench.closure();
    const auto gap = length_quotient(rr.closure, inst.ideal);
    const RingSpec& ring = *inst.ring;

    if (cfg.json()) {
        Json j;
        j["instance"] = inst.name;
        j["inputs"] = bench.fingerprint();
        j["ring"] = {{"char", ring.characteristic()}, {"vars", ring.nvars()}, {"dim", ring.dim()}};
        j["colength"] = a.colength;
        j["horizon"] = a.horizon;
        j["hilbert"] = {{"values", a.hilbert.values}, {"coeffs", a.hilbert.coeffs}, {"postulation", a.hilbert.postulation}};
        Json sally = {{"reduction_number", a.sally.reduction_number},
                      {"c", a.sally.c},
                      {"lengths", a.sally.lengths},
                      {"m_annihilated", a.sally.m_annihilated}};
        sally["rank_estimate"] = a.sally.rank_estimate ? Json(*a.sally.rank_estimate) : Json(nullptr);
        j["sally"] = sally;
        j["ratliff_rush"] = {{"stop_index", rr.stop_index},
                             {"cap", rr.cap},
                             {"gap", gap},
                             {"closure", rr.closure.to_string()}};
        out << j.dump(2) << "\n";
        return ok;
    }
    out << "instance: " << inst.name << "\n";
    out << "inputs: " << bench.fingerprint() << "\n";
    out << "ring: char " << ring.characteristic() << ", " << ring.nvars() << " variables, dim " << ring.dim() << "\n";
    out << "l(A/I) = " << a.colength << "\n";
    out << "reduction number = " << a.sally.reduction_number << "\n";
    out << "horizon N = " << a.horizon << "\n";
    out << "l(A/I^{n+1}), n = 0..N: " << join(a.hilbert.values) << "\n";
    out << "hilbert coefficients:";
    for (std::size_t i = 0; i < a.hilbert.coeffs.size(); ++i) out << " e" << i << "=" << a.hilbert.coeffs[i];
    out << "\npostulation index = " << a.hilbert.postulation << "\n";
    out << "sally lengths l(S_n), n = 0..N: " << join(a.sally.lengths) << "\n";
    out << "c = l(I^2/QI) = " << a.sally.c << "\n";
    out << "m S = 0 (checked up to n = " << std::max(a.horizon, a.sally.reduction_number)
        << "): " << (a.sally.m_annihilated ? "yes" : "no") << "\n";
    if (a.sally.rank_estimate) out << "rank estimate e1-e0+l(A/I) = " << *a.sally.rank_estimate << "\n";
    out << "ratliff-rush closure: " << rr.closure.to_string() << "\n";
    out << "  l(closure/I) = " << gap << ", chain stopped at n = " << rr.stop_index << " (cap " << rr.cap << ")\n";
    return ok;
}

int cmd_verify(const NamedInstance& inst, const std::string& theorem, const Settings& cfg, std::ostream& out) {
    Workbench bench(inst, cfg.lab());
    VerificationReport report = run_verifiers(bench, theorem);
    if (cfg.json())
        out << report_json(inst.name, report).dump(2) << "\n";
    else
        print_report(out, inst.name, report);
    return report.failed() ? verification_failed : ok;
}

struct CatalogEntry {
    std::string name;
    VerificationReport report;
};

int cmd_catalog(const Settings& cfg, const std::string& only, const std::string& theorem, const std::string& emit,
                bool list, std::ostream& out) {
    std::vector<NamedInstance> instances;
    for (auto& inst : catalog())
        if (only.empty() || inst.name == only) instances.push_back(std::move(inst));
    if (instances.empty()) throw UsageError("no catalog instance named '" + only + "'");

    if (list) {
        for (const auto& inst : instances) out << inst.name << "\n";
        return ok;
    }
    if (!emit.empty()) {
        std::filesystem::create_directories(emit);
        for (const auto& inst : instances) {
            auto path = std::filesystem::path(emit) / (sanitize(inst.name) + ".ring");
            std::ofstream f(path, std::ios::binary);
            if (!f) throw UsageError("cannot write " + path.string());
            f << serialize(inst);
            out << path.string() << "\n";
        }
        return ok;
    }

    std::vector<CatalogEntry> results(instances.size());
    const auto count = static_cast<std::ptrdiff_t>(instances.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const NamedInstance& inst = instances[static_cast<std::size_t>(i)];
        CatalogEntry& entry = results[static_cast<std::size_t>(i)];
        entry.name = inst.name;
        const auto it = inst.expected.find("certifies");
        const bool expect_cert = it == inst.expected.end() || it->second != 0;
        try {
            Workbench bench(through_text(inst, cfg.kernel()), cfg.lab());
            entry.report = run_verifiers(bench, theorem);
        } catch (const CertificationError& e) {
            entry.report.claims.push_back(
                {"certify:reduction", expect_cert ? ClaimStatus::fail : ClaimStatus::pass,
                 std::string(e.what()) + (expect_cert ? "" : " (expected: Q is not a reduction)")});
        } catch (const std::exception& e) {
            entry.report.claims.push_back({"compute", ClaimStatus::fail, e.what()});
        }
    }

    bool failed = false;
    Json all = Json::array();
    for (const auto& entry : results) {
        failed = failed || entry.report.failed();
        if (cfg.json())
            all.push_back(report_json(entry.name, entry.report));
        else
            print_report(out, entry.name, entry.report);
    }
    if (cfg.json()) out << Json{{"instances", all}}.dump(2) << "\n";
    return failed ? verification_failed : ok;
}

void add_settings(CLI::App* cmd, Settings& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--backend", cfg.backend, "Kernel backend")->check(CLI::IsMember({"serial", "openmp"}));
    cmd->add_option("--horizon", cfg.horizon, "Horizon N (default max(r+3, d+3))");
    cmd->add_option("--reduction-cap", cfg.reduction_cap, "Cap for reduction certification (default l(A/I))");
    cmd->add_option("--rr-cap", cfg.rr_cap, "Cap for the Ratliff-Rush chain");
    cmd->add_option("--max-horizon", cfg.max_horizon, "Largest horizon tried when the fit is unstable");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert coefficients, Sally modules and reductions of m-primary ideals", "sallylab"};
    app.require_subcommand(1);

    Settings cfg;
    std::string file, theorem = "all";

    auto* inv = app.add_subcommand("invariants", "Hilbert and Sally profiles and Ratliff-Rush closure of a file");
    inv->add_option("file", file, "Input file")->required();
    add_settings(inv, cfg);

    std::vector<std::string> theorems = theorem_names();
    theorems.push_back("all");
    auto* ver = app.add_subcommand("verify", "Run the claim verifiers on a file");
    ver->add_option("file", file, "Input file")->required();
    ver->add_option("--theorem", theorem, "Which verifier")->check(CLI::IsMember(theorems));
    add_settings(ver, cfg);

    std::string family = "gno", out_path;
    unsigned m = 1, d = 1;
    std::vector<unsigned> subset;
    std::uint32_t prime = PrimeField::kDefaultPrime;
    bool run_after = false;
    auto* ex = app.add_subcommand("example", "Write an example instance, optionally verifying it");
    ex->add_option("--family", family, "Example family")->check(CLI::IsMember({"gno", "rossi"}));
    ex->add_option("--m", m, "Number of x variables (gno)");
    ex->add_option("--d", d, "Dimension (gno)");
    ex->add_option("--lambda", subset, "Subset of 1..m, comma separated (gno)")->delimiter(',');
    ex->add_option("--prime", prime, "Field characteristic");
    ex->add_option("--out", out_path, "Output path (default: standard output)");
    ex->add_flag("--run", run_after, "Also run all verifiers");
    add_settings(ex, cfg);

    std::string only, emit;
    bool list = false;
    auto* cat = app.add_subcommand("catalog", "Verify the regression catalog");
    cat->add_option("--name", only, "Only this instance");
    cat->add_option("--theorem", theorem, "Which verifier")->check(CLI::IsMember(theorems));
    cat->add_option("--emit", emit, "Write the instances as files into this directory instead");
    cat->add_flag("--list", list, "List instance names");
    add_settings(cat, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*inv) return cmd_invariants(load_file(file, cfg.kernel()), cfg, out);
        if (*ver) return cmd_verify(load_file(file, cfg.kernel()), theorem, cfg, out);
        if (*cat) return cmd_catalog(cfg, only, theorem, emit, list, out);
        if (*ex) {
            NamedInstance inst = [&] {
                try {
                    return family == "rossi" ? rossi_example(prime)
                                             : gno_family(m, d, std::set<unsigned>(subset.begin(), subset.end()), prime);
                } catch (const StructuralError& e) {
                    throw UsageError(e.what());
                }
            }();
            const std::string text = serialize(inst);
            if (!out_path.empty() && out_path != "-") {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw UsageError("cannot write " + out_path);
                f << text;
            } else if (!run_after) {
                out << text;
            }
            if (!run_after) return ok;
            return cmd_verify(through_text(inst, cfg.kernel()), "all", cfg, out);
        }
    } catch (const FileParseError& e) {
        err << e.path << ":" << e.error.what() << "\n";
        return parse_failed;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_failed;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const CertificationError& e) {
        err << "certification failed: " << e.what() << "\n";
        return certification_failed;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << "\n";
        return certification_failed;
    }
    return usage_error;
}

}  // namespace sally::cli
