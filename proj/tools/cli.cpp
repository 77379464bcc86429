#include "cli.hpp"

#include "prymlab/classify.hpp"
#include "prymlab/errors.hpp"
#include "prymlab/families.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace prymlab::cli {

namespace {

std::vector<std::uint64_t> parse_primes(const std::string& text) {
    std::vector<std::uint64_t> primes;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad prime list '" + text + "'");
        primes.push_back(std::stoull(tok));
    }
    if (primes.empty())
        throw ParseError("empty prime list");
    return primes;
}

// name=value or name=lo..hi
std::pair<std::string, std::vector<Rational>> parse_param(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ParseError("expected name=value, got '" + text + "'");
    std::string name = text.substr(0, eq), value = text.substr(eq + 1);
    auto dots = value.find("..");
    if (dots == std::string::npos)
        return {name, {parse_rational(value)}};
    Rational lo = parse_rational(value.substr(0, dots)), hi = parse_rational(value.substr(dots + 2));
    if (lo.get_den() != 1 || hi.get_den() != 1 || lo > hi)
        throw ParseError("bad range '" + value + "'");
    std::vector<Rational> vals;
    for (Rational x = lo; x <= hi; x += 1)
        vals.push_back(x);
    return {name, vals};
}

Bindings single_bindings(const std::vector<std::string>& params) {
    Bindings env;
    for (const auto& p : params) {
        auto [name, vals] = parse_param(p);
        if (vals.size() != 1)
            throw ParseError("instantiate takes single values, got '" + p + "'");
        env[name] = vals.front();
    }
    return env;
}

std::vector<Bindings> cartesian(const std::vector<std::pair<std::string, std::vector<Rational>>>& axes) {
    std::vector<Bindings> out{Bindings{}};
    for (const auto& [name, vals] : axes) {
        std::vector<Bindings> next;
        for (const auto& env : out)
            for (const auto& v : vals) {
                Bindings e = env;
                e[name] = v;
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

Json params_json(const Bindings& env, const std::vector<std::string>& order) {
    Json j = Json::object();
    for (const auto& name : order)
        j[name] = to_string(env.at(name));
    return j;
}

struct ScanSettings {
    std::string family;
    std::vector<std::string> params;
    std::vector<std::string> box;
    std::string out_path;
    unsigned jobs = 1;
    ClassifyOptions classify;
};

// Reads existing lines, drops a torn final line, returns the set of parameter keys already present.
std::set<std::string> load_existing(const std::string& path) {
    std::set<std::string> keys;
    if (path.empty() || !std::filesystem::exists(path))
        return keys;
    std::ifstream in(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    std::size_t good_end = 0, pos = 0, lineno = 0;
    while (pos < content.size()) {
        auto nl = content.find('\n', pos);
        ++lineno;
        if (nl == std::string::npos)
            break;
        std::string line = content.substr(pos, nl - pos);
        if (!line.empty()) {
            Json j;
            try {
                j = Json::parse(line);
                keys.insert(j.at("params").dump());
            } catch (const std::exception& e) {
                throw Error(path + ":" + std::to_string(lineno) + ": unreadable record: " + line);
            }
        }
        pos = nl + 1;
        good_end = pos;
    }
    if (good_end < content.size())
        std::filesystem::resize_file(path, good_end);
    return keys;
}

int run_scan(const ScanSettings& s, std::ostream& out, std::ostream& err) {
    std::vector<std::string> order;
    std::vector<std::pair<std::string, std::vector<Rational>>> axes;
    const FamilySpec* spec = nullptr;
    if (!s.family.empty() == !s.box.empty())
        throw ParseError("scan needs exactly one of --family or --box");
    if (!s.family.empty()) {
        spec = &find_family(s.family);
        std::map<std::string, std::vector<Rational>> given;
        for (const auto& p : s.params) {
            auto [name, vals] = parse_param(p);
            given[name] = vals;
        }
        for (const auto& name : spec->param_names) {
            auto it = given.find(name);
            if (it == given.end())
                throw ParseError("family " + spec->id + " needs parameter '" + name + "'");
            axes.emplace_back(name, it->second);
            given.erase(it);
        }
        if (!given.empty())
            throw ParseError("family " + spec->id + " has no parameter '" + given.begin()->first + "'");
        order = spec->param_names;
    } else {
        std::map<std::string, std::vector<Rational>> given;
        for (const auto& p : s.box) {
            auto [name, vals] = parse_param(p);
            given[name] = vals;
        }
        if (given.size() != 2 || !given.count("a") || !given.count("b"))
            throw ParseError("--box needs a=lo..hi b=lo..hi");
        axes = {{"a", given["a"]}, {"b", given["b"]}};
        order = {"a", "b"};
    }

    const auto present = load_existing(s.out_path);
    std::vector<Bindings> todo;
    for (auto& env : cartesian(axes))
        if (!present.count(params_json(env, order).dump()))
            todo.push_back(std::move(env));

    std::ofstream file;
    if (!s.out_path.empty()) {
        file.open(s.out_path, std::ios::app | std::ios::binary);
        if (!file)
            throw Error("cannot open " + s.out_path + " for writing");
    }
    std::ostream& sink = s.out_path.empty() ? out : file;

    // Each slot holds a finished line, an empty string for a skipped degenerate point, or an error.
    struct Slot {
        bool done = false;
        std::string line;
        std::string note;
        int failure = kOk;
    };
    std::vector<Slot> slots(todo.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};

    auto work = [&]() {
        for (;;) {
            std::size_t i = next++;
            if (i >= todo.size() || abort)
                return;
            Slot slot;
            slot.done = true;
            const Json key = params_json(todo[i], order);
            try {
                Curve c = spec ? instantiate(spec->id, todo[i]) : Curve(todo[i].at("a"), todo[i].at("b"));
                Json rec = to_json(classify(c, s.classify));
                Json line;
                line["params"] = key;
                for (auto it = rec.begin(); it != rec.end(); ++it)
                    line[it.key()] = it.value();
                slot.line = line.dump();
            } catch (const DegenerateCurve& e) {
                slot.note = "skipping " + key.dump() + ": " + e.what();
            } catch (const InternalInconsistency& e) {
                slot.note = key.dump() + ": " + e.what();
                slot.failure = kInternal;
            } catch (const WeilBoundViolation& e) {
                slot.note = key.dump() + ": " + e.what();
                slot.failure = kInternal;
            } catch (const NonExactDivision& e) {
                slot.note = key.dump() + ": " + e.what();
                slot.failure = kInternal;
            } catch (const std::exception& e) {
                slot.note = key.dump() + ": " + e.what();
                slot.failure = kUsage;
            }
            if (slot.failure != kOk)
                abort = true;
            {
                std::lock_guard lock(mu);
                slots[i] = std::move(slot);
            }
            cv.notify_all();
        }
    };

    const unsigned jobs = std::max(1u, s.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back(work);

    int status = kOk;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        Slot slot;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return slots[i].done || abort; });
            if (!slots[i].done)
                break;
            slot = slots[i];
        }
        if (!slot.note.empty())
            err << slot.note << "\n";
        if (slot.failure != kOk) {
            status = slot.failure;
            break;
        }
        if (!slot.line.empty()) {
            sink << slot.line << "\n";
            sink.flush();
        }
    }
    abort = true;
    for (auto& t : pool)
        t.join();
    if (status == kOk) {
        for (const auto& slot : slots)
            if (slot.failure != kOk) {
                err << slot.note << "\n";
                status = slot.failure;
                break;
            }
    }
    if (!s.out_path.empty() && !file)
        throw Error("write to " + s.out_path + " failed");
    return status;
}

void print_family_list(bool as_json, std::ostream& out) {
    if (!as_json) {
        for (const auto& f : list_families()) {
            std::string params;
            for (const auto& p : f.param_names)
                params += (params.empty() ? "" : ",") + p;
            out << f.id << "\t" << params << "\t" << f.expected_torsion.name();
            if (f.expected_end_ring)
                out << "\t" << to_string(*f.expected_end_ring);
            out << "\n";
        }
        return;
    }
    Json all = Json::array();
    for (const auto& f : list_families()) {
        Json j;
        j["id"] = f.id;
        j["aliases"] = f.aliases;
        j["params"] = f.param_names;
        Json derived = Json::object();
        for (const auto& [name, e] : f.derived)
            derived[name] = e.str();
        j["derived"] = derived;
        j["a"] = f.a.str();
        j["b"] = f.b.str();
        j["expected_torsion"] = f.expected_torsion.name();
        j["expected_end_ring"] = f.expected_end_ring ? Json(to_string(*f.expected_end_ring)) : Json(nullptr);
        j["j"] = f.j_formula ? Json(f.j_formula->str()) : Json(nullptr);
        all.push_back(j);
    }
    out << all.dump(2) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curves y^3 = x^4 + a x^2 + b and their Prym surfaces", "prymlab"};
    app.require_subcommand(1);

    bool as_json = false, use_oracle = false;
    std::string a_text, b_text, delta_text, primes_text, family_id;
    std::vector<std::string> params;

    auto* classify_cmd = app.add_subcommand("classify", "invariants, endomorphisms and torsion of one curve");
    classify_cmd->add_option("a", a_text)->required();
    classify_cmd->add_option("b", b_text)->required();
    classify_cmd->add_flag("--json", as_json, "emit a JSON record");
    classify_cmd->add_flag("--oracle", use_oracle, "bound torsion by point counts");
    classify_cmd->add_option("--primes", primes_text, "comma-separated good primes for the oracle");

    auto* dual_cmd = app.add_subcommand("dual", "bigonal dual curve");
    dual_cmd->add_option("a", a_text)->required();
    dual_cmd->add_option("b", b_text)->required();

    auto* twist_cmd = app.add_subcommand("twist", "sextic twist (delta a, delta^2 b)");
    twist_cmd->add_option("a", a_text)->required();
    twist_cmd->add_option("b", b_text)->required();
    twist_cmd->add_option("delta", delta_text)->required();

    auto* family_cmd = app.add_subcommand("family", "parameterized families");
    family_cmd->require_subcommand(1);
    auto* list_cmd = family_cmd->add_subcommand("list", "list registered families");
    list_cmd->add_flag("--json", as_json, "dump formulas as JSON");
    auto* inst_cmd = family_cmd->add_subcommand("instantiate", "evaluate a family at parameters");
    inst_cmd->add_option("id", family_id)->required();
    inst_cmd->add_option("--param", params, "name=value")->allow_extra_args(false);

    auto* oracle_cmd = app.add_subcommand("oracle", "L-polynomials and Prym orders at good primes");
    oracle_cmd->add_option("a", a_text)->required();
    oracle_cmd->add_option("b", b_text)->required();
    oracle_cmd->add_option("--primes", primes_text, "comma-separated good primes");

    ScanSettings scan;
    auto* scan_cmd = app.add_subcommand("scan", "classify a family sweep or a box of integer curves as JSONL");
    scan_cmd->add_option("--family", scan.family, "family id");
    scan_cmd->add_option("--param", scan.params, "name=value or name=lo..hi")->allow_extra_args(false);
    scan_cmd->add_option("--box", scan.box, "a=lo..hi b=lo..hi")->expected(2);
    scan_cmd->add_option("--out", scan.out_path, "JSONL output file (appended, resumable)");
    scan_cmd->add_option("--jobs", scan.jobs, "worker threads")->check(CLI::PositiveNumber);
    scan_cmd->add_flag("--oracle", use_oracle, "bound torsion by point counts");
    scan_cmd->add_option("--primes", primes_text, "comma-separated good primes for the oracle");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*classify_cmd) {
            Curve c(parse_rational(a_text), parse_rational(b_text));
            ClassifyOptions opts;
            opts.oracle = use_oracle || !primes_text.empty();
            if (!primes_text.empty())
                opts.primes = parse_primes(primes_text);
            auto rec = classify(c, opts);
            if (as_json)
                out << to_json(rec).dump() << "\n";
            else
                out << format_report(rec);
        } else if (*dual_cmd) {
            out << to_json(bigonal_dual(Curve(parse_rational(a_text), parse_rational(b_text)))).dump() << "\n";
        } else if (*twist_cmd) {
            Rational delta = parse_rational(delta_text);
            if (delta == 0)
                throw ParseError("twist parameter must be nonzero");
            out << to_json(sextic_twist(Curve(parse_rational(a_text), parse_rational(b_text)), delta)).dump()
                << "\n";
        } else if (*family_cmd) {
            if (*list_cmd)
                print_family_list(as_json, out);
            else
                out << to_json(instantiate(family_id, single_bindings(params))).dump() << "\n";
        } else if (*oracle_cmd) {
            Curve c(parse_rational(a_text), parse_rational(b_text));
            auto primes = primes_text.empty() ? good_primes(c, 5, 5) : parse_primes(primes_text);
            out << to_json(run_oracle(c, primes)).dump() << "\n";
        } else if (*scan_cmd) {
            scan.classify.oracle = use_oracle || !primes_text.empty();
            if (!primes_text.empty())
                scan.classify.primes = parse_primes(primes_text);
            return run_scan(scan, out, err);
        }
    } catch (const DegenerateCurve& e) {
        err << "error: " << e.what() << "\n";
        return kDegenerate;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return kInternal;
    } catch (const WeilBoundViolation& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return kInternal;
    } catch (const NonExactDivision& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

} // namespace prymlab::cli
