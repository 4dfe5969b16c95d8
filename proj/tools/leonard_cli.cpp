// Command-line surface: validation, construction, verification, orbit and
// twin listings, classification, and seeded enumeration over GF(p) or Q.
//
// Exit codes: 0 success / pass, 1 domain failure (inadmissible tuple or a
// failed verification), 2 parse error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "leonard/io.hpp"

namespace {

using namespace leonard;

constexpr int kExitPass = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitIo = 3;

struct TupleArgs {
    std::string a, b, c, q;
    int d = 3;
    std::string field = "Q";
    std::string file;
};

void add_tuple_options(CLI::App* cmd, TupleArgs& args) {
    cmd->add_option("--a", args.a, "scalar a");
    cmd->add_option("--b", args.b, "scalar b");
    cmd->add_option("--c", args.c, "scalar c");
    cmd->add_option("--q", args.q, "scalar q");
    cmd->add_option("--d", args.d, "diameter (>= 3)");
    cmd->add_option("--field", args.field, "field: Q or GF:p")
        ->envname("LEONARD_FIELD")
        ->capture_default_str();
    cmd->add_option("--tuple", args.file, "read the tuple from a JSON file instead of flags");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

QRacahTuple resolve_tuple(const TupleArgs& args) {
    if (!args.file.empty()) return tuple_from_json(read_json_file(args.file));
    if (args.a.empty() || args.b.empty() || args.c.empty() || args.q.empty())
        throw ParseError("missing tuple: pass --a --b --c --q (and --d), or --tuple FILE");
    const Field f = Field::parse(args.field);
    return make_tuple(Scalar::parse(args.a, f), Scalar::parse(args.b, f), Scalar::parse(args.c, f),
                      Scalar::parse(args.q, f), args.d);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("write to " + path + " failed");
}

// write-temp-rename, so a crashed run never leaves a partial catalog
void write_text_atomic(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << text;
        out.flush();
        if (!out) throw IoError("write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw IoError("cannot rename " + tmp + " to " + path);
}

int cmd_validate(const TupleArgs& args, bool pair_only, const std::string& format) {
    const QRacahTuple t = resolve_tuple(args);
    const AdmissibilityReport rep = pair_only ? check_pair_admissible(t) : check_triple_admissible(t);
    if (format == "structured")
        std::cout << admissibility_json(rep).dump() << "\n";
    else
        std::cout << admissibility_text(rep);
    return rep.admissible() ? kExitPass : kExitDomain;
}

int cmd_build(const TupleArgs& args, const std::vector<std::string>& emit, const std::string& out) {
    bool with_idempotents = false;
    for (const std::string& e : emit) {
        if (e == "idempotents")
            with_idempotents = true;
        else
            throw ParseError("unknown --emit value: " + e);
    }
    const QRacahTuple t = resolve_tuple(args);
    const Bundle b = make_bundle(t, with_idempotents);
    write_text(out, bundle_to_json(b, with_idempotents).dump(2) + "\n");
    return kExitPass;
}

// Bundle contents are compared entry by entry against a fresh rebuild before
// the definitional checks run, so a single mutated entry is caught with a
// witness.
VerificationReport verify_bundle(const Bundle& b) {
    VerificationReport rep;
    const Bundle fresh = make_bundle(b.tuple, !b.E.empty());
    rep.add("bundle.parameter_array", b.array == fresh.array);
    auto compare = [&](const char* name, const ExactMatrix& got, const ExactMatrix& want) {
        if (got.dim() != want.dim()) {
            rep.add(name, false, "dimension mismatch");
            return;
        }
        const auto pos = (got - want).first_nonzero();
        rep.add(name, !pos,
                pos ? "entry (" + std::to_string(pos->first) + "," + std::to_string(pos->second) + ")"
                    : "");
    };
    compare("bundle.A", b.A, fresh.A);
    compare("bundle.A_star", b.A_star, fresh.A_star);
    compare("bundle.A_eps", b.A_eps, fresh.A_eps);
    compare("bundle.M", b.M, fresh.M);
    if (!b.E.empty()) {
        const std::size_t n = static_cast<std::size_t>(b.A.dim());
        if (b.E.size() != n || b.E_star.size() != n || b.E_eps.size() != n) {
            rep.add("bundle.idempotents", false, "wrong family size");
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                compare(("bundle.E[" + std::to_string(i) + "]").c_str(), b.E[i], fresh.E[i]);
                compare(("bundle.E_star[" + std::to_string(i) + "]").c_str(), b.E_star[i], fresh.E_star[i]);
                compare(("bundle.E_eps[" + std::to_string(i) + "]").c_str(), b.E_eps[i], fresh.E_eps[i]);
            }
        }
    }
    return rep;
}

int cmd_verify(const TupleArgs& args, const std::string& from, const std::string& format) {
    VerificationReport rep;
    const QRacahTuple t = [&] {
        if (!from.empty()) {
            const Bundle b = bundle_from_json(read_json_file(from));
            rep = verify_bundle(b);
            return b.tuple;
        }
        return resolve_tuple(args);
    }();
    rep.append(full_verification(t));
    if (format == "structured")
        std::cout << report_json(rep).dump() << "\n";
    else
        std::cout << report_text(rep);
    return rep.overall() ? kExitPass : kExitDomain;
}

std::vector<QRacahTuple> group_closure(const QRacahTuple& t, const std::vector<Generator>& gens) {
    std::vector<QRacahTuple> frontier{t}, all{t};
    std::set<std::string> seen{t.text()};
    while (!frontier.empty()) {
        std::vector<QRacahTuple> next;
        for (const QRacahTuple& u : frontier) {
            for (Generator g : gens) {
                QRacahTuple v = apply_generator(g, u);
                if (seen.insert(v.text()).second) {
                    all.push_back(v);
                    next.push_back(std::move(v));
                }
            }
        }
        frontier = std::move(next);
    }
    sort_canonical(all);
    return all;
}

int cmd_orbit(const TupleArgs& args, const std::string& group, const std::string& format) {
    const QRacahTuple t = resolve_tuple(args);
    std::vector<QRacahTuple> members;
    if (group == "z2cubed") {
        members = triple_orbit(t);
    } else if (group == "d4") {
        const AdmissibilityReport adm = check_pair_admissible(t);
        if (!adm.admissible())
            throw InadmissibleTuple(adm.first_failure()->name + ": " + adm.first_failure()->witness);
        members = group_closure(t, {Generator::Star, Generator::Down, Generator::DDown});
    } else if (group == "full") {
        const AdmissibilityReport adm = check_triple_admissible(t);
        if (!adm.admissible())
            throw InadmissibleTuple(adm.first_failure()->name + ": " + adm.first_failure()->witness);
        members = group_closure(t, {Generator::Star, Generator::Eps, Generator::Harpoon,
                                    Generator::Down, Generator::DDown});
    } else {
        throw ParseError("unknown --group value: " + group);
    }
    if (format == "structured") {
        Json arr = Json::array();
        for (const QRacahTuple& u : members) arr.push_back(tuple_to_json(u));
        std::cout << arr.dump() << "\n";
    } else {
        for (const QRacahTuple& u : members) std::cout << u.text() << "\n";
    }
    return kExitPass;
}

int cmd_twins(const TupleArgs& args, const std::string& format) {
    const QRacahTuple t = resolve_tuple(args);
    const std::vector<QRacahTuple> list = twins(t);
    const char* label = twin_case(t) == TwinCase::Four ? "case (i)" : "case (ii)";
    if (format == "structured") {
        Json arr = Json::array();
        for (const QRacahTuple& u : list) arr.push_back(tuple_to_json(u));
        std::cout << Json{{"case", label}, {"twins", std::move(arr)}}.dump() << "\n";
    } else {
        for (const QRacahTuple& u : list) std::cout << u.text() << "\n";
        std::cerr << label << "\n";
    }
    return kExitPass;
}

int cmd_classify(const std::string& input, const std::string& out, bool strict) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!input.empty() && input != "-") {
        file.open(input);
        if (!file) throw IoError("cannot open " + input);
        in = &file;
    }

    std::map<std::string, std::vector<QRacahTuple>> classes; // hat text -> members
    std::string line;
    int lineno = 0;
    bool had_bad_line = false;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const QRacahTuple t = tuple_from_json(Json::parse(line));
            const AdmissibilityReport adm = check_triple_admissible(t);
            if (!adm.admissible())
                throw InadmissibleTuple(adm.first_failure()->name + ": " + adm.first_failure()->witness);
            classes[hat_invariant(t).text()].push_back(t);
        } catch (const Json::parse_error& e) {
            had_bad_line = true;
            std::cerr << "line " << lineno << ": skipped (" << e.what() << ")\n";
        } catch (const Error& e) {
            had_bad_line = true;
            std::cerr << "line " << lineno << ": skipped (" << e.what() << ")\n";
        }
    }
    if (strict && had_bad_line) return kExitParse;

    std::string text;
    for (const auto& [hat, members] : classes) {
        // equal hat invariants must mean one orbit
        const std::vector<QRacahTuple> orbit = triple_orbit(members.front());
        std::set<std::string> orbit_texts;
        for (const QRacahTuple& u : orbit) orbit_texts.insert(u.text());
        for (const QRacahTuple& u : members) {
            if (!orbit_texts.count(u.text()))
                throw Error("hat class " + hat + " spans more than one orbit at " + u.text());
        }
        QRacahTuple representative = members.front();
        for (const QRacahTuple& u : orbit)
            if (u.text() == orbit_key(members.front())) representative = u;
        const bool verified = full_verification(representative).overall();
        CatalogRecord rec = make_catalog_record(representative, verified,
                                                static_cast<int>(members.size()));
        text += catalog_record_to_json(rec).dump() + "\n";
    }
    write_text_atomic(out, text);
    return kExitPass;
}

int cmd_enumerate(const std::string& field_text, int d, int count, std::uint64_t seed,
                  const std::string& out) {
    const Field f = Field::parse(field_text);
    if (f.kind() == FieldKind::PrimeField && f.modulus() <= 2 * static_cast<std::uint64_t>(d) + 2)
        throw ParseError("modulus must exceed 2d+2");
    TupleSampler sampler(f, d, seed);

    std::ofstream file;
    std::ostream* sink = &std::cout;
    if (!out.empty() && out != "-") {
        file.open(out, std::ios::app);
        if (!file) throw IoError("cannot open " + out + " for appending");
        sink = &file;
    }

    const int per_record_attempts = 10000;
    for (int k = 0; k < count; ++k) {
        const QRacahTuple t = sampler.next_triple_admissible(per_record_attempts);
        if (!full_verification(t).overall())
            throw Error("verification failed for admissible tuple " + t.text());
        const CatalogRecord rec = make_catalog_record(t, true);
        *sink << catalog_record_to_json(rec).dump() << "\n";
        sink->flush();
        if (!*sink) throw IoError("write failed");
    }
    if (sink != &std::cout) std::cerr << "appended " << count << " records\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Leonard pairs/triples of QRacah type: construction, verification, classification"};
    app.require_subcommand(1);

    std::string format = "text";

    TupleArgs validate_args;
    bool pair_only = false;
    CLI::App* validate = app.add_subcommand("validate", "check tuple admissibility");
    add_tuple_options(validate, validate_args);
    validate->add_flag("--pair-only", pair_only, "check the pair conditions only");
    validate->add_option("--format", format, "text|structured");

    TupleArgs build_args;
    std::vector<std::string> emit;
    std::string build_out;
    CLI::App* build = app.add_subcommand("build", "construct the realization bundle");
    add_tuple_options(build, build_args);
    build->add_option("--emit", emit, "extra artifacts: idempotents");
    build->add_option("--out", build_out, "output file (default stdout)");

    TupleArgs verify_args;
    std::string verify_from;
    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    add_tuple_options(verify, verify_args);
    verify->add_option("--from", verify_from, "verify a bundle file written by build");
    verify->add_option("--format", format, "text|structured");

    TupleArgs orbit_args;
    std::string group = "z2cubed";
    CLI::App* orbit = app.add_subcommand("orbit", "list a group orbit of the tuple");
    add_tuple_options(orbit, orbit_args);
    orbit->add_option("--group", group, "d4|full|z2cubed")->capture_default_str();
    orbit->add_option("--format", format, "text|structured");

    TupleArgs twins_args;
    CLI::App* twins_cmd = app.add_subcommand("twins", "list the twins of the tuple");
    add_tuple_options(twins_cmd, twins_args);
    twins_cmd->add_option("--format", format, "text|structured");

    std::string classify_in, classify_out;
    bool strict = false;
    CLI::App* classify = app.add_subcommand("classify", "group tuple records by isomorphism class");
    classify->add_option("--input", classify_in, "newline-delimited tuple records (default stdin)");
    classify->add_option("--out", classify_out, "catalog output file (default stdout)");
    classify->add_flag("--strict", strict, "fail on unparsable lines");

    std::string enum_field = "Q";
    int enum_d = 3, enum_count = 1;
    std::uint64_t enum_seed = 0;
    std::string enum_out;
    CLI::App* enumerate = app.add_subcommand("enumerate", "sample, verify, and append admissible tuples");
    enumerate->add_option("--field", enum_field, "field: Q or GF:p")
        ->envname("LEONARD_FIELD")
        ->capture_default_str();
    enumerate->add_option("--d", enum_d, "diameter (>= 3)")->capture_default_str();
    enumerate->add_option("--count", enum_count, "number of records")->capture_default_str();
    enumerate->add_option("--seed", enum_seed, "PRNG seed")->capture_default_str();
    enumerate->add_option("--out", enum_out, "catalog file, appended (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(validate_args, pair_only, format);
        if (app.got_subcommand(build)) return cmd_build(build_args, emit, build_out);
        if (app.got_subcommand(verify)) return cmd_verify(verify_args, verify_from, format);
        if (app.got_subcommand(orbit)) return cmd_orbit(orbit_args, group, format);
        if (app.got_subcommand(twins_cmd)) return cmd_twins(twins_args, format);
        if (app.got_subcommand(classify)) return cmd_classify(classify_in, classify_out, strict);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(enum_field, enum_d, enum_count, enum_seed, enum_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitPass;
}
