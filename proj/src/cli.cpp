#include "hurwitz/cli.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/identities.hpp"
#include "hurwitz/kernels.hpp"
#include "hurwitz/quadrature.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>

namespace hk::cli {

namespace {

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorCode::InvalidParams, msg); }

std::string trim(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

double parse_number(std::string_view s) {
    const auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        const double p = parse_number(s.substr(0, slash)), q = parse_number(s.substr(slash + 1));
        if (q == 0.0) usage("zero denominator in '" + std::string(s) + "'");
        return p / q;
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) usage("cannot parse number '" + std::string(s) + "'");
    return v;
}

// value = coef * pi^{has_pi}
struct Literal {
    double coef;
    bool has_pi;
};

Literal parse_literal(std::string_view raw) {
    const std::string s = trim(raw);
    const auto pos = s.find("pi");
    if (pos == std::string::npos) return {parse_number(s), false};
    std::string pre = s.substr(0, pos), post = s.substr(pos + 2);
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    double coef = pre.empty() ? 1.0 : pre == "-" ? -1.0 : parse_number(pre);
    if (!post.empty()) {
        if (post.front() != '/') usage("cannot parse '" + std::string(raw) + "'");
        const double q = parse_number(post.substr(1));
        if (q == 0.0) usage("zero denominator in '" + std::string(raw) + "'");
        coef /= q;
    }
    return {coef, true};
}

std::vector<std::string> split(std::string_view s) {
    std::vector<std::string> items;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    items.push_back(cur);
    for (const auto& i : items)
        if (trim(i).empty()) usage("empty item in list '" + std::string(s) + "'");
    return items;
}

// ---- formatting ----

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string json_num(double v) { return std::isfinite(v) ? num(v) : "null"; }
std::string json_str(const std::string& s) { return nlohmann::json(s).dump(); }

// Compact value for parameter display: integers and pi multiples stay readable.
std::string short_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string alpha_text(double ratio) { return ratio == 1.0 ? "pi" : short_num(ratio) + "pi"; }

// Small writer: structure by hand so floats keep the fixed 17-digit scientific form.
class JsonObject {
public:
    JsonObject& field(const std::string& key, const std::string& raw) {
        parts_.push_back(json_str(key) + ":" + raw);
        return *this;
    }
    JsonObject& str(const std::string& key, const std::string& v) { return field(key, json_str(v)); }
    JsonObject& real(const std::string& key, double v) { return field(key, json_num(v)); }
    JsonObject& integer(const std::string& key, long v) { return field(key, std::to_string(v)); }
    JsonObject& boolean(const std::string& key, bool v) { return field(key, v ? "true" : "false"); }
    std::string dump() const {
        std::string s = "{";
        for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + parts_[i];
        return s + "}";
    }

private:
    std::vector<std::string> parts_;
};

std::string json_array(const std::vector<std::string>& items, const char* sep = ",") {
    std::string s = "[";
    for (size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
    return s + "]";
}

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& f) {
    if (f == "text") return Format::Text;
    if (f == "csv") return Format::Csv;
    if (f == "json") return Format::Json;
    usage("unknown format '" + f + "' (text, csv, json)");
}

// ---- reports ----

JsonObject params_json(const IdentityInfo& info, const CaseParams& p) {
    JsonObject o;
    o.integer("k", p.k).integer(info.order_name.empty() ? "order" : info.order_name, p.order);
    o.real("a", p.a).real("b", p.b).real("alpha", p.alpha()).real("alpha_over_pi", p.alpha_ratio).real("x", p.x);
    return o;
}

std::string report_json(const IdentityReport& r) {
    const IdentityInfo& info = find_identity(r.icase.id);
    const CaseParams& p = r.icase.params;
    JsonObject o;
    o.str("id", r.icase.id)
        .integer("k", p.k)
        .integer("N_or_m", p.order)
        .real("a", p.a)
        .real("b", p.b)
        .real("alpha", p.alpha())
        .real("alpha_over_pi", p.alpha_ratio);
    if (info.params & UsesX) o.real("x", p.x);
    o.real("lhs", r.lhs).real("rhs", r.rhs).real("abs_res", r.abs_residual).real("rel_res", r.rel_residual);
    o.real("bound", r.bound).real("imag", r.imag).real("tol", r.tol).str("variant", r.variant).boolean("pass", r.pass);
    if (!r.note.empty()) o.str("note", r.note);
    return o.dump();
}

const char* kCsvHeader = "id,k,N_or_m,a,b,alpha,lhs,rhs,abs_res,rel_res,variant,bound";

std::string report_csv(const IdentityReport& r) {
    const CaseParams& p = r.icase.params;
    std::ostringstream s;
    s << r.icase.id << ',' << p.k << ',' << p.order << ',' << num(p.a) << ',' << num(p.b) << ',' << num(p.alpha()) << ','
      << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.abs_residual) << ',' << num(r.rel_residual) << ',' << r.variant
      << ',' << num(r.bound);
    return s.str();
}

std::string case_text(const IdentityInfo& info, const CaseParams& p) {
    std::string s;
    auto add = [&](const std::string& kv) { s += (s.empty() ? "" : " ") + kv; };
    if (info.params & UsesK) add("k=" + std::to_string(p.k));
    if (info.params & UsesOrder) add(info.order_name + "=" + std::to_string(p.order));
    if (info.params & UsesA) add("a=" + short_num(p.a));
    if (info.params & UsesB) add("b=" + short_num(p.b));
    if (info.params & UsesAlpha) add("alpha=" + alpha_text(p.alpha_ratio));
    if (info.params & UsesX) add("x=" + short_num(p.x));
    return s;
}

std::string report_text(const IdentityReport& r) {
    const IdentityInfo& info = find_identity(r.icase.id);
    std::ostringstream s;
    s << r.icase.id << " [" << r.variant << "] " << case_text(info, r.icase.params) << "\n"
      << "  lhs      " << num(r.lhs) << "\n"
      << "  rhs      " << num(r.rhs) << "\n"
      << "  abs_res  " << num(r.abs_residual) << "\n"
      << "  rel_res  " << num(r.rel_residual) << "  (tol " << short_num(r.tol) << ")\n"
      << "  bound    " << num(r.bound) << "\n";
    if (r.imag != 0.0) s << "  imag     " << num(r.imag) << "\n";
    if (!r.note.empty()) s << "  note     " << r.note << "\n";
    s << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
    return s.str();
}

void write_reports(std::ostream& out, Format f, const std::string& command, const std::vector<IdentityReport>& reps) {
    size_t passed = 0;
    for (const auto& r : reps) passed += r.pass;
    if (f == Format::Csv) {
        out << kCsvHeader << "\n";
        for (const auto& r : reps) out << report_csv(r) << "\n";
    } else if (f == Format::Json) {
        std::vector<std::string> rows;
        for (const auto& r : reps) rows.push_back(report_json(r));
        JsonObject summary;
        summary.integer("cases", static_cast<long>(reps.size()))
            .integer("passed", static_cast<long>(passed))
            .integer("failed", static_cast<long>(reps.size() - passed));
        JsonObject top;
        top.integer("schema", 1).str("command", command).field("rows", json_array(rows, ",\n")).field("summary", summary.dump());
        out << top.dump() << "\n";
    } else {
        for (const auto& r : reps) out << report_text(r);
        if (reps.size() > 1) out << passed << "/" << reps.size() << " passed\n";
    }
}

// ---- parameter flags shared by verify and scan ----

struct ParamFlags {
    std::string k, N, m, n, p, a, b, alpha, beta, x;
    std::vector<CLI::Option*> opts;

    void attach(CLI::App* app) {
        opts = {app->add_option("--k", k, "kernel order k"),
                app->add_option("--N", N, "convolution order N"),
                app->add_option("--m", m, "order m"),
                app->add_option("--n", n, "order n (classical formula)"),
                app->add_option("--p", p, "order p (Glaisher-type identity)"),
                app->add_option("--a", a, "Hurwitz shift a"),
                app->add_option("--b", b, "Hurwitz shift b"),
                app->add_option("--alpha", alpha, "scale alpha (e.g. pi, 2pi, pi/2); beta = pi^2/alpha"),
                app->add_option("--beta", beta, "scale beta instead of alpha"),
                app->add_option("--x", x, "kernel argument")};
    }

    // Given flags must carry values: an empty list is an empty grid.
    bool any() const {
        bool given = false;
        for (const CLI::Option* o : opts) {
            if (o->count() == 0) continue;
            given = true;
            if (trim(o->as<std::string>()).empty()) usage("empty grid for " + o->get_name());
        }
        return given;
    }

    std::string order_flag() const {
        int given = !N.empty() + !m.empty() + !n.empty() + !p.empty();
        if (given > 1) usage("give only one of --N, --m, --n, --p");
        return !N.empty() ? N : !m.empty() ? m : !n.empty() ? n : p;
    }

    void reject_unused(const IdentityInfo& info) const {
        auto check = [&](const std::string& v, unsigned mask, const char* name) {
            if (!v.empty() && !(info.params & mask)) usage(info.id + " does not take --" + std::string(name));
        };
        check(k, UsesK, "k");
        check(order_flag(), UsesOrder, "N/m/n/p");
        check(a, UsesA, "a");
        check(b, UsesB, "b");
        check(alpha + beta, UsesAlpha, "alpha");
        check(x, UsesX, "x");
        if (!alpha.empty() && !beta.empty()) usage("give --alpha or --beta, not both");
    }

    std::vector<double> ratios() const {
        if (!beta.empty()) {
            std::vector<double> r;
            for (double bt : parse_ratio_list(beta)) r.push_back(1.0 / bt);
            return r;
        }
        return parse_ratio_list(alpha);
    }

    // Cartesian product of the given lists; missing slots take the identity's quick case.
    std::vector<CaseParams> grid(const IdentityInfo& info) const {
        any();
        reject_unused(info);
        const CaseParams q = info.quick;
        const std::string ord = order_flag();
        const std::vector<int> ks = k.empty() ? std::vector<int>{q.k} : parse_int_list(k);
        const std::vector<int> os = ord.empty() ? std::vector<int>{q.order} : parse_int_list(ord);
        const std::vector<double> as = a.empty() ? std::vector<double>{q.a} : parse_real_list(a);
        const std::vector<double> bs = b.empty() ? std::vector<double>{q.b} : parse_real_list(b);
        const std::vector<double> rs = (alpha.empty() && beta.empty()) ? std::vector<double>{q.alpha_ratio} : ratios();
        const std::vector<double> xs = x.empty() ? std::vector<double>{q.x} : parse_real_list(x);
        std::vector<CaseParams> out;
        for (int kk : ks)
            for (int oo : os)
                for (double aa : as)
                    for (double bb : bs)
                        for (double rr : rs)
                            for (double xx : xs) {
                                CaseParams c = q;
                                c.k = kk;
                                c.order = oo;
                                c.a = aa;
                                c.b = bb;
                                c.alpha_ratio = rr;
                                c.x = xx;
                                out.push_back(c);
                            }
        return out;
    }
};

auto case_key(const IdentityCase& c) {
    const CaseParams& p = c.params;
    return std::make_tuple(c.id, p.k, p.order, p.a, p.b, p.alpha_ratio, p.x);
}

std::vector<IdentityReport> run_cases(const std::vector<IdentityCase>& cases, std::optional<double> tol) {
    std::vector<IdentityReport> out(cases.size());
    std::atomic<size_t> next{0};
    std::vector<std::string> errors(cases.size());
    auto work = [&] {
        for (size_t i = next++; i < cases.size(); i = next++) {
            try {
                out[i] = evaluate_identity(cases[i], tol);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned n = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<size_t>(cases.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (!e.empty()) throw Error(ErrorCode::InvalidParams, e);
    return out;
}

class Output {
public:
    Output(std::ostream& fallback, const std::string& path) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) usage("cannot open output file '" + path + "'");
            os_ = &file_;
        }
    }
    std::ostream& get() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

// ---- commands ----

struct Common {
    std::string format = "text";
    std::string output;
    std::optional<double> tol;
    std::string variant;
};

int cmd_verify(const std::string& id, const ParamFlags& flags, const Common& c, std::ostream& out) {
    const IdentityInfo& info = find_identity(id);
    const Format f = parse_format(c.format);
    std::vector<CaseParams> grid = flags.grid(info);
    if (grid.size() != 1) usage("verify takes single values; use scan for lists");
    validate_case(info, grid.front());
    const IdentityReport rep = evaluate_identity({info.id, grid.front(), c.variant}, c.tol);
    Output o(out, c.output);
    write_reports(o.get(), f, "verify", {rep});
    return rep.pass ? kPass : kFail;
}

int cmd_scan(const std::string& target, const ParamFlags& flags, bool quick, const Common& c, std::ostream& out) {
    const Format f = parse_format(c.format);
    std::vector<IdentityCase> cases;
    if (target == "all") {
        if (flags.any()) usage("scan all takes no parameter lists");
        if (!c.variant.empty()) usage("scan all takes no --variant");
        for (const auto& info : identity_registry()) {
            if (quick) {
                cases.push_back({info.id, info.quick, ""});
            } else {
                for (const auto& p : info.grid) cases.push_back({info.id, p, ""});
            }
        }
    } else {
        const IdentityInfo& info = find_identity(target);
        std::vector<CaseParams> grid;
        if (quick) {
            if (flags.any()) usage("--quick takes no parameter lists");
            grid = {info.quick};
        } else {
            grid = flags.any() ? flags.grid(info) : info.grid;
        }
        for (const auto& p : grid) cases.push_back({info.id, p, c.variant});
    }
    if (cases.empty()) usage("empty grid");
    for (const auto& cs : cases) validate_case(find_identity(cs.id), cs.params);
    std::stable_sort(cases.begin(), cases.end(), [](const IdentityCase& l, const IdentityCase& r) { return case_key(l) < case_key(r); });
    const std::vector<IdentityReport> reps = run_cases(cases, c.tol);
    Output o(out, c.output);
    write_reports(o.get(), f, "scan", reps);
    return std::all_of(reps.begin(), reps.end(), [](const IdentityReport& r) { return r.pass; }) ? kPass : kFail;
}

struct KernelFlags {
    std::string x = "1", a = "1", alpha = "pi";
    int k = 1;
    bool cross_check = false;
};

int cmd_kernel(const std::string& family, const KernelFlags& kf, const Common& c, std::ostream& out) {
    KernelFamily fam;
    if (family == "psi")
        fam = KernelFamily::Psi;
    else if (family == "phi")
        fam = KernelFamily::Phi;
    else
        usage("unknown kernel '" + family + "' (psi, phi)");
    const Format f = parse_format(c.format);
    if (f == Format::Csv) usage("kernel supports text and json");
    KernelParams p;
    p.x = parse_real(kf.x);
    p.a = parse_real(kf.a);
    p.k = kf.k;
    p.alpha = parse_ratio(kf.alpha) * std::numbers::pi;
    if (!(p.x > 0) || !std::isfinite(p.x)) usage("x must be > 0");
    if (p.k < 1) usage("k must be ≥ 1");
    const KernelValue v = kernel_relative(fam, p);

    std::optional<QuadratureResult> q;
    LineIntegralSpec spec;
    spec.family = fam;
    if (kf.cross_check) q = kernel_via_quadrature(p, spec);
    const double diff = q ? std::fabs(q->value.real() - v.value) : 0.0;
    const bool ok = !q || diff <= 1e-6;

    Output o(out, c.output);
    std::ostream& os = o.get();
    if (f == Format::Json) {
        JsonObject j;
        j.integer("schema", 1).str("command", "kernel").str("kernel", family);
        j.real("x", p.x).real("a", p.a).integer("k", p.k).real("alpha", p.alpha);
        j.real("series", v.value).real("series_rel_err", v.rel_err).integer("digits", v.digits);
        if (q) {
            j.real("quadrature", q->value.real()).real("quadrature_imag", q->value.imag()).real("quadrature_err", q->error);
            j.real("difference", diff).str("norm", to_string(spec.norm)).boolean("agree", ok);
        }
        os << j.dump() << "\n";
    } else {
        os << family << "(x=" << short_num(p.x) << ", a=" << short_num(p.a) << ", k=" << p.k << ", alpha=" << alpha_text(p.alpha / std::numbers::pi)
           << ")\n";
        os << "  series      " << num(v.value) << "\n";
        if (q) {
            os << "  quadrature  " << num(q->value.real()) << "  (imag " << num(q->value.imag()) << ", err " << num(q->error) << ")\n";
            os << "  difference  " << num(diff) << "  " << (ok ? "AGREE" : "DISAGREE") << "\n";
        }
    }
    return ok ? kPass : kFail;
}

std::string grid_json(const VariantResolution& r) {
    const IdentityInfo& info = find_identity(r.id);
    std::vector<std::string> pts;
    for (const auto& p : r.grid) pts.push_back(params_json(info, p).dump());
    return json_array(pts);
}

int cmd_errata(const Common& c, std::ostream& out) {
    const Format f = parse_format(c.format);
    if (f == Format::Csv) usage("errata supports text (markdown) and json");
    std::vector<std::string> ids;
    for (const auto& info : identity_registry())
        if (info.variants.size() > 1) ids.push_back(info.id);
    std::vector<VariantResolution> res(ids.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < ids.size(); i = next++) res[i] = compare_variants(ids[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::min<unsigned>(worker_count(), static_cast<unsigned>(ids.size())); ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    const bool all = std::all_of(res.begin(), res.end(), [](const VariantResolution& r) { return r.resolved; });
    Output o(out, c.output);
    std::ostream& os = o.get();
    if (f == Format::Json) {
        std::vector<std::string> entries;
        for (const auto& r : res) {
            std::vector<std::string> evs;
            for (const auto& e : r.evidence) {
                std::vector<std::string> rs;
                for (double v : e.residuals) rs.push_back(json_num(v));
                JsonObject ej;
                ej.str("variant", e.variant).field("residuals", json_array(rs)).real("max", e.max_residual).real("min", e.min_residual);
                evs.push_back(ej.dump());
            }
            JsonObject ej;
            ej.str("id", r.id).str("ambiguity", r.ambiguity).str("status", r.resolved ? "RESOLVED" : "UNRESOLVED");
            ej.str("winner", r.winner).real("separation", r.separation).real("tol", r.tol).field("grid", grid_json(r));
            ej.field("variants", json_array(evs));
            entries.push_back(ej.dump());
        }
        JsonObject top;
        top.integer("schema", 1).str("command", "errata").real("required_separation", kRequiredSeparation);
        top.field("entries", json_array(entries, ",\n"));
        os << top.dump() << "\n";
    } else {
        os << "# Errata\n\n";
        os << "A reading wins when its relative residual is within tolerance at every grid point and every other\n"
           << "reading misses by at least " << short_num(kRequiredSeparation) << "x its worst residual.\n";
        for (const auto& r : res) {
            const IdentityInfo& info = find_identity(r.id);
            os << "\n## " << r.id << "\n\n";
            os << "- ambiguity: " << r.ambiguity << "\n";
            os << "- status: " << (r.resolved ? "RESOLVED, reading `" + r.winner + "`" : std::string("UNRESOLVED")) << "\n";
            os << "- separation: " << num(r.separation) << "\n";
            os << "- grid (" << r.grid.size() << " points):";
            for (const auto& p : r.grid) os << " [" << case_text(info, p) << "]";
            os << "\n\n| reading | max rel residual | min rel residual |\n|---|---|---|\n";
            for (const auto& e : r.evidence) os << "| " << e.variant << " | " << num(e.max_residual) << " | " << num(e.min_residual) << " |\n";
        }
    }
    return all ? kPass : kFail;
}

std::string params_list(const IdentityInfo& i) {
    std::vector<std::string> ps;
    if (i.params & UsesK) ps.push_back("k");
    if (i.params & UsesOrder) ps.push_back(i.order_name);
    if (i.params & UsesA) ps.push_back("a");
    if (i.params & UsesB) ps.push_back("b");
    if (i.params & UsesAlpha) ps.push_back("alpha");
    if (i.params & UsesX) ps.push_back("x");
    std::string s;
    for (const auto& p : ps) s += (s.empty() ? "" : ",") + p;
    return s;
}

int cmd_list(const Common& c, std::ostream& out) {
    const Format f = parse_format(c.format);
    if (f == Format::Csv) usage("list supports text and json");
    Output o(out, c.output);
    std::ostream& os = o.get();
    if (f == Format::Json) {
        std::vector<std::string> ids;
        for (const auto& i : identity_registry()) {
            std::vector<std::string> vs;
            for (const auto& v : i.variants) vs.push_back(json_str(v));
            JsonObject j;
            j.str("id", i.id).str("summary", i.summary).str("params", params_list(i)).field("variants", json_array(vs));
            j.str("default_variant", i.default_variant);
            if (i.params & UsesOrder) j.integer("min_order", i.min_order).integer("max_order", i.max_order);
            if (i.params & UsesK) j.integer("max_k", i.max_k);
            ids.push_back(j.dump());
        }
        JsonObject top;
        top.integer("schema", 1).str("command", "list").field("identities", json_array(ids, ",\n"));
        os << top.dump() << "\n";
        return kPass;
    }
    for (const auto& i : identity_registry()) {
        os << i.id << "  (" << params_list(i) << ")\n    " << i.summary << "\n";
        if (i.variants.size() > 1) {
            os << "    readings:";
            for (const auto& v : i.variants) os << " " << v << (v == i.default_variant ? "*" : "");
            os << "\n";
        }
    }
    return kPass;
}

}  // namespace

double parse_real(std::string_view s) {
    const Literal l = parse_literal(s);
    const double v = l.has_pi ? l.coef * std::numbers::pi : l.coef;
    if (!std::isfinite(v)) usage("value '" + std::string(s) + "' is not finite");
    return v;
}

double parse_ratio(std::string_view s) {
    const Literal l = parse_literal(s);
    const double r = l.has_pi ? l.coef : l.coef / std::numbers::pi;
    if (!(r > 0) || !std::isfinite(r)) usage("alpha must be > 0");
    return r;
}

std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    for (const auto& raw : split(s)) {
        const std::string item = trim(raw);
        const auto dots = item.find("..");
        auto to_int = [&](const std::string& t) {
            int v = 0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) usage("cannot parse integer '" + t + "'");
            return v;
        };
        if (dots == std::string::npos) {
            out.push_back(to_int(item));
            continue;
        }
        const int lo = to_int(item.substr(0, dots)), hi = to_int(item.substr(dots + 2));
        if (hi < lo) usage("empty range '" + item + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

std::vector<double> parse_real_list(std::string_view s) {
    std::vector<double> out;
    for (const auto& item : split(s)) out.push_back(parse_real(item));
    return out;
}

std::vector<double> parse_ratio_list(std::string_view s) {
    std::vector<double> out;
    for (const auto& item : split(s)) out.push_back(parse_ratio(item));
    return out;
}

unsigned worker_count() {
    if (const char* env = std::getenv("HK_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hurwitz kernel identities: evaluation, verification and errata"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, bool with_variant) {
        sub->add_option("--format", common.format, "text, csv or json");
        sub->add_option("--output,-o", common.output, "write to file instead of stdout");
        if (with_variant) {
            sub->add_option("--tol", common.tol, "relative residual tolerance override");
            sub->add_option("--variant", common.variant, "reading of an ambiguous identity");
        }
    };

    std::string verify_id, scan_id, family;
    ParamFlags vflags, sflags;
    bool quick = false;
    KernelFlags kf;

    CLI::App* verify = app.add_subcommand("verify", "evaluate one identity case");
    verify->add_option("id", verify_id, "identity id")->required();
    vflags.attach(verify);
    add_common(verify, true);

    CLI::App* scan = app.add_subcommand("scan", "evaluate an identity over a grid");
    scan->add_option("id", scan_id, "identity id or 'all'")->required();
    sflags.attach(scan);
    scan->add_flag("--quick", quick, "smallest registered case only");
    add_common(scan, true);

    CLI::App* kernel = app.add_subcommand("kernel", "evaluate the Psi or Phi kernel");
    kernel->add_option("family", family, "psi or phi")->required();
    kernel->add_option("--x", kf.x, "argument");
    kernel->add_option("--a", kf.a, "shift a");
    kernel->add_option("--k", kf.k, "order k");
    kernel->add_option("--alpha", kf.alpha, "scale alpha");
    kernel->add_flag("--cross-check", kf.cross_check, "compare against line quadrature");
    add_common(kernel, false);

    CLI::App* errata = app.add_subcommand("errata", "resolve every ambiguous identity");
    add_common(errata, false);

    CLI::App* list = app.add_subcommand("list", "list registered identities");
    add_common(list, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << e.what() << "\n";
            return kPass;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*verify) return cmd_verify(verify_id, vflags, common, out);
        if (*scan) return cmd_scan(scan_id, sflags, quick, common, out);
        if (*kernel) return cmd_kernel(family, kf, common, out);
        if (*errata) return cmd_errata(common, out);
        return cmd_list(common, out);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidParams) {
            const std::string msg = e.what();
            const std::string prefix = std::string(to_string(ErrorCode::InvalidParams)) + ": ";
            err << "error: " << (msg.rfind(prefix, 0) == 0 ? msg.substr(prefix.size()) : msg) << "\n";
            return kUsage;
        }
        err << "error: " << e.what() << "\n";
        return kFail;
    }
}

}  // namespace hk::cli
