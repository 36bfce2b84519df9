// csmforge: characteristic classes of projective schemes from the command line.
//
// Reads a declarative jobfile (ring, named hypersurfaces, ideals, complete
// intersections, f-schemes), runs one subcommand against it, and prints the
// result as an H-polynomial or, with --json, as a record whose rationals are
// exact [numerator, denominator] pairs.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 resource or
// randomness failure.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "csmforge/classes.hpp"

namespace csmforge {
namespace {

using ordered_json = nlohmann::ordered_json;

// ---- jobfile -------------------------------------------------------------------

struct JobFile {
    std::string path;
    Ring ring;
    std::vector<std::pair<std::string, Poly>> hypersurfaces;     // declaration order
    std::vector<std::pair<std::string, Ideal>> ideals;
    std::vector<std::pair<std::string, std::vector<Poly>>> cis;  // ordered; last is distinguished
    std::vector<std::pair<std::string, FScheme>> fschemes;

    const Poly* find_hypersurface(const std::string& name) const {
        for (const auto& [n, f] : hypersurfaces)
            if (n == name) return &f;
        return nullptr;
    }
    const Ideal* find_ideal(const std::string& name) const {
        for (const auto& [n, i] : ideals)
            if (n == name) return &i;
        return nullptr;
    }
    const std::vector<Poly>* find_ci(const std::string& name) const {
        for (const auto& [n, c] : cis)
            if (n == name) return &c;
        return nullptr;
    }
    const FScheme* find_fscheme(const std::string& name) const {
        for (const auto& [n, u] : fschemes)
            if (n == name) return &u;
        return nullptr;
    }
    bool name_taken(const std::string& name) const {
        return find_hypersurface(name) || find_ideal(name) || find_ci(name) ||
               find_fscheme(name);
    }
};

// Cursor over one jobfile line with 1-based column diagnostics.
class LineCursor {
public:
    LineCursor(const std::string& path, int line_no, const std::string& text)
        : path_(path), line_no_(line_no), text_(text) {}

    [[noreturn]] void fail(const std::string& msg, size_t at) const {
        throw InputError(path_ + ":" + std::to_string(line_no_) + ":" +
                         std::to_string(at + 1) + ": " + msg);
    }
    [[noreturn]] void fail_here(const std::string& msg) const { fail(msg, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail_here(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string word() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a name", start);
        return text_.substr(start, pos_ - start);
    }

    long integer() {
        skip_space();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer", start);
        return std::stol(text_.substr(start, pos_ - start));
    }

    // Rest of the line from the current position (for polynomial expressions).
    std::string rest() {
        skip_space();
        std::string r = text_.substr(pos_);
        size_t here = pos_;
        pos_ = text_.size();
        rest_start_ = here;
        return r;
    }
    size_t rest_start() const { return rest_start_; }
    size_t pos() const { return pos_; }

private:
    const std::string& path_;
    int line_no_;
    const std::string& text_;
    size_t pos_ = 0;
    size_t rest_start_ = 0;
};

// `ring GF(65521)[x,y,z]` or `ring QQ[x,y,z]`; field_override rebases the field.
Ring parse_ring_decl(LineCursor& cur, const std::optional<std::uint32_t>& prime_override) {
    FieldSpec field;
    std::string kind = cur.word();
    if (kind == "QQ") {
        field = FieldSpec::rationals();
    } else if (kind == "GF") {
        cur.expect('(');
        long p = cur.integer();
        cur.expect(')');
        if (p <= 1 || p > 0xFFFFFFFFL) cur.fail_here("field characteristic out of range");
        field = FieldSpec::gf(static_cast<std::uint32_t>(p));
    } else {
        cur.fail_here("unknown coefficient field '" + kind + "' (expected QQ or GF(p))");
    }
    if (prime_override) field = FieldSpec::gf(*prime_override);

    cur.expect('[');
    std::vector<std::string> vars;
    do {
        vars.push_back(cur.word());
    } while (cur.accept(','));
    cur.expect(']');
    if (!cur.at_end()) cur.fail_here("trailing text after ring declaration");
    return Ring::make(field, std::move(vars));
}

// `[A, B, C]` of previously declared hypersurface names.
std::vector<Poly> parse_name_list(LineCursor& cur, const JobFile& job) {
    cur.expect('[');
    std::vector<Poly> polys;
    do {
        size_t at = cur.pos();
        std::string name = cur.word();
        const Poly* f = job.find_hypersurface(name);
        if (f == nullptr) cur.fail("undeclared hypersurface '" + name + "'", at);
        polys.push_back(*f);
    } while (cur.accept(','));
    cur.expect(']');
    return polys;
}

// `A * B^-1 * C^2`: product of declared ideal or hypersurface names with integer
// exponents (default 1).
FScheme parse_fscheme_expr(LineCursor& cur, const JobFile& job) {
    std::vector<FSchemeFactor> factors;
    do {
        size_t at = cur.pos();
        std::string name = cur.word();
        std::optional<Ideal> ideal;
        if (const Ideal* i = job.find_ideal(name)) {
            ideal = *i;
        } else if (const Poly* f = job.find_hypersurface(name)) {
            ideal = Ideal(f->ring(), {*f}, name);
        } else {
            cur.fail("undeclared ideal or hypersurface '" + name + "'", at);
        }
        int exp = 1;
        if (cur.accept('^')) exp = static_cast<int>(cur.integer());
        factors.push_back({std::move(*ideal), exp});
    } while (cur.accept('*'));
    return fs_normalize(std::move(factors));
}

JobFile parse_jobfile(const std::string& path, const std::optional<std::uint32_t>& prime_override) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open jobfile '" + path + "'");

    JobFile job;
    job.path = path;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        LineCursor cur(path, line_no, line);
        if (cur.at_end()) continue;
        std::string stmt = cur.word();

        if (stmt == "ring") {
            if (job.ring.valid()) cur.fail_here("ring declared twice");
            job.ring = parse_ring_decl(cur, prime_override);
            continue;
        }
        if (!job.ring.valid()) cur.fail_here("'" + stmt + "' before the ring declaration");

        size_t name_at = cur.pos();
        std::string name = cur.word();
        if (job.name_taken(name)) cur.fail("name '" + name + "' already declared", name_at);
        cur.expect('=');

        if (stmt == "hypersurface") {
            std::string expr = cur.rest();
            try {
                Poly f = Poly::parse(expr, job.ring);
                auto h = f.homogeneity();
                if (!h.homogeneous || f.is_zero())
                    cur.fail("hypersurface must be a nonzero homogeneous polynomial",
                             cur.rest_start());
                job.hypersurfaces.emplace_back(std::move(name), std::move(f));
            } catch (const InputError& e) {
                cur.fail(e.what(), cur.rest_start());
            }
        } else if (stmt == "ideal") {
            std::vector<Poly> gens = parse_name_list(cur, job);
            if (!cur.at_end()) cur.fail_here("trailing text after ideal declaration");
            job.ideals.emplace_back(std::move(name), Ideal(job.ring, std::move(gens), name));
        } else if (stmt == "ci") {
            std::vector<Poly> polys = parse_name_list(cur, job);
            if (!cur.at_end()) cur.fail_here("trailing text after ci declaration");
            job.cis.emplace_back(std::move(name), std::move(polys));
        } else if (stmt == "fscheme") {
            FScheme u = parse_fscheme_expr(cur, job);
            if (!cur.at_end()) cur.fail_here("trailing text after fscheme declaration");
            job.fschemes.emplace_back(std::move(name), std::move(u));
        } else {
            cur.fail("unknown statement '" + stmt + "'", 0);
        }
    }
    if (!job.ring.valid()) throw InputError(path + ": no ring declaration");
    return job;
}

// ---- target resolution -----------------------------------------------------------

// The ideal a class subcommand operates on: a named object, or the last declared
// ideal, else ci, else hypersurface.
Ideal resolve_ideal(const JobFile& job, const std::string& name) {
    if (!name.empty()) {
        if (const Ideal* i = job.find_ideal(name)) return *i;
        if (const std::vector<Poly>* c = job.find_ci(name)) return Ideal(job.ring, *c, name);
        if (const Poly* f = job.find_hypersurface(name)) return Ideal(job.ring, {*f}, name);
        throw InputError(job.path + ": no ideal, ci, or hypersurface named '" + name + "'");
    }
    if (!job.ideals.empty()) return job.ideals.back().second;
    if (!job.cis.empty()) return Ideal(job.ring, job.cis.back().second, job.cis.back().first);
    if (!job.hypersurfaces.empty())
        return Ideal(job.ring, {job.hypersurfaces.back().second}, job.hypersurfaces.back().first);
    throw InputError(job.path + ": no ideal, ci, or hypersurface declared");
}

CompleteIntersection resolve_ci(const JobFile& job, const std::string& name, bool almost_smooth,
                                const GroebnerOptions& opts) {
    const std::vector<Poly>* polys = nullptr;
    if (!name.empty()) {
        polys = job.find_ci(name);
        if (polys == nullptr)
            throw InputError(job.path + ": no ci named '" + name + "'");
    } else {
        if (job.cis.empty()) throw InputError(job.path + ": no ci declared");
        polys = &job.cis.back().second;
    }
    return make_ci(*polys, -1, almost_smooth, opts);
}

const FScheme& resolve_fscheme(const JobFile& job, const std::string& name) {
    if (!name.empty()) {
        if (const FScheme* u = job.find_fscheme(name)) return *u;
        throw InputError(job.path + ": no fscheme named '" + name + "'");
    }
    if (job.fschemes.empty()) throw InputError(job.path + ": no fscheme declared");
    return job.fschemes.back().second;
}

// ---- output ----------------------------------------------------------------------

ordered_json rational_pair(const mpq_class& q) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
        throw AnomalyError("class coefficient exceeds the exact JSON integer range");
    return ordered_json::array({q.get_num().get_si(), q.get_den().get_si()});
}

ordered_json class_pairs(const GradedClass& g) {
    ordered_json arr = ordered_json::array();
    for (int j = 0; j <= g.ambient_dim(); ++j) arr.push_back(rational_pair(g[j]));
    return arr;
}

std::string chi_str(const mpq_class& chi) {
    return chi.get_str(); // integral in every valid run; anomalies throw earlier
}

struct Emitter {
    bool json = false;
    std::string command;
    const SegreOptions* opts = nullptr;

    ordered_json record;

    void finish_json() {
        record["command"] = command;
        record["seed"] = opts->seed;
        record["prime"] = opts->prime;
        record["trials"] = opts->trials;
        std::cout << record.dump() << "\n";
    }

    void emit_class(const std::string& label, const GradedClass& g,
                    const std::optional<mpq_class>& chi = {}) {
        if (json) {
            record["n"] = g.ambient_dim();
            record["class"] = class_pairs(g);
            if (chi) record["chi"] = rational_pair(*chi);
            finish_json();
        } else {
            std::cout << label << " = " << g.str();
            if (chi) std::cout << ", chi = " << chi_str(*chi);
            std::cout << "\n";
        }
    }

    void emit_chi(const mpq_class& chi, int n) {
        if (json) {
            record["n"] = n;
            record["chi"] = rational_pair(chi);
            finish_json();
        } else {
            std::cout << "chi = " << chi_str(chi) << "\n";
        }
    }

    // Returns the process exit code (0 match, 1 mismatch).
    int emit_verify(const VerifyResult& v) {
        if (json) {
            record["n"] = v.lhs.ambient_dim();
            record["match"] = v.match;
            record["lhs"] = class_pairs(v.lhs);
            record["rhs"] = class_pairs(v.rhs);
            record["diff"] = class_pairs(v.diff);
            finish_json();
        } else if (v.match) {
            std::cout << "MATCH: " << v.lhs.str() << "\n";
        } else {
            std::cout << "MISMATCH: lhs = " << v.lhs.str() << ", rhs = " << v.rhs.str()
                      << ", diff = " << v.diff.str() << "\n";
        }
        return v.match ? 0 : 1;
    }

    int emit_lemma(const std::vector<LemmaResult>& results) {
        bool all = true;
        if (json) {
            ordered_json arr = ordered_json::array();
            for (const auto& r : results) {
                all = all && r.match;
                ordered_json e;
                e["k"] = r.k;
                e["match"] = r.match;
                e["lhs"] = class_pairs(r.lhs);
                e["rhs"] = class_pairs(r.rhs);
                arr.push_back(std::move(e));
            }
            record["n"] = results.empty() ? 0 : results.front().lhs.ambient_dim();
            record["match"] = all;
            record["results"] = std::move(arr);
            finish_json();
        } else {
            for (const auto& r : results) {
                all = all && r.match;
                if (r.match) {
                    std::cout << "k=" << r.k << " MATCH: " << r.lhs.str() << "\n";
                } else {
                    std::cout << "k=" << r.k << " MISMATCH: lhs = " << r.lhs.str()
                              << ", rhs = " << r.rhs.str() << "\n";
                }
            }
        }
        return all ? 0 : 1;
    }
};

// ---- command wiring --------------------------------------------------------------

struct CommonArgs {
    std::string file;
    std::string name;
    bool json = false;
    std::optional<std::uint32_t> prime;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::vector<long> ks;
};

std::uint64_t parse_seed_text(const std::string& text, const std::string& where) {
    try {
        size_t used = 0;
        std::uint64_t v = std::stoull(text, &used, 0);
        if (used != text.size()) throw std::invalid_argument("trailing text");
        return v;
    } catch (const std::exception&) {
        throw InputError(where + ": cannot parse seed '" + text + "'");
    }
}

SegreOptions build_options(const CommonArgs& a) {
    SegreOptions opts;
    if (const char* env = std::getenv("CSM_FORGE_SEED"))
        opts.seed = parse_seed_text(env, "CSM_FORGE_SEED");
    if (a.seed) opts.seed = *a.seed;
    if (a.prime) opts.prime = *a.prime;
    if (a.trials) {
        if (*a.trials < 1) throw InputError("--trials must be at least 1");
        opts.trials = *a.trials;
    }
    return opts;
}

void add_common(CLI::App* sub, CommonArgs& a, bool with_k) {
    sub->add_option("file", a.file, "jobfile to read")->required();
    sub->add_option("--name", a.name, "declared object to operate on (default: last declared)");
    sub->add_flag("--json", a.json, "emit a machine-readable record");
    sub->add_option("--prime", a.prime, "rebase the jobfile ring to GF(prime)");
    sub->add_option("--seed", a.seed, "randomness seed (also: CSM_FORGE_SEED)");
    sub->add_option("--trials", a.trials, "independent runs that must agree");
    if (with_k) sub->add_option("--k", a.ks, "thickening exponents")->delimiter(',');
}

int run(int argc, char** argv) {
    CLI::App app{"characteristic classes of subschemes of projective space"};
    app.require_subcommand(1);

    CommonArgs a;
    CLI::App* segre = app.add_subcommand("segre", "Segre class of an ideal");
    CLI::App* fulton = app.add_subcommand("fulton", "Chern-Fulton class of an ideal");
    CLI::App* csm = app.add_subcommand("csm", "CSM class of a complete intersection");
    CLI::App* milnor = app.add_subcommand("milnor", "Milnor class of a complete intersection");
    CLI::App* euler = app.add_subcommand("euler", "Euler characteristic");
    CLI::App* fsegre = app.add_subcommand("fscheme-segre", "Segre class of an f-scheme");
    CLI::App* verify = app.add_subcommand("verify", "exact identity checks");
    verify->require_subcommand(1);
    CLI::App* v_theorem = verify->add_subcommand("theorem", "blowup family against the almost-smooth oracle");
    CLI::App* v_lemma = verify->add_subcommand("lemma", "thickened Segre classes against the closed form");
    CLI::App* v_remark = verify->add_subcommand("remark", "CSM insensitivity to hypersurface powers");
    CLI::App* v_conjecture = verify->add_subcommand("conjecture", "blowup family against inclusion-exclusion");

    for (CLI::App* sub : {segre, fulton, csm, milnor, euler, fsegre, v_theorem, v_conjecture})
        add_common(sub, a, false);
    for (CLI::App* sub : {v_lemma, v_remark}) add_common(sub, a, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    SegreOptions opts = build_options(a);
    JobFile job = parse_jobfile(a.file, a.prime);

    Emitter out;
    out.json = a.json;
    out.opts = &opts;

    if (segre->parsed()) {
        out.command = "segre";
        out.emit_class("s", segre_class(resolve_ideal(job, a.name), opts));
        return 0;
    }
    if (fulton->parsed()) {
        out.command = "fulton";
        out.emit_class("c_F", chern_fulton(resolve_ideal(job, a.name), opts));
        return 0;
    }
    if (csm->parsed()) {
        out.command = "csm";
        GradedClass c = csm_blowup(resolve_ci(job, a.name, false, opts.groebner), opts);
        out.emit_class("c_SM", c, integral(c));
        return 0;
    }
    if (milnor->parsed()) {
        out.command = "milnor";
        out.emit_class("M", milnor_class(resolve_ci(job, a.name, false, opts.groebner), opts));
        return 0;
    }
    if (euler->parsed()) {
        out.command = "euler";
        CompleteIntersection ci = resolve_ci(job, a.name, false, opts.groebner);
        out.emit_chi(euler_characteristic(ci, opts), ci.n());
        return 0;
    }
    if (fsegre->parsed()) {
        out.command = "fscheme-segre";
        out.emit_class("s", fscheme_segre(resolve_fscheme(job, a.name), opts));
        return 0;
    }
    if (v_theorem->parsed()) {
        out.command = "verify-theorem";
        return out.emit_verify(verify_theorem(resolve_ci(job, a.name, true, opts.groebner), opts));
    }
    if (v_lemma->parsed()) {
        out.command = "verify-lemma";
        std::vector<long> ks = a.ks.empty() ? std::vector<long>{1, 2, 3} : a.ks;
        return out.emit_lemma(verify_lemma(resolve_ci(job, a.name, true, opts.groebner), ks, opts));
    }
    if (v_remark->parsed()) {
        out.command = "verify-remark";
        if (a.ks.size() > 1) throw InputError("verify remark takes a single --k");
        int k = a.ks.empty() ? 2 : static_cast<int>(a.ks.front());
        CompleteIntersection ci = resolve_ci(job, a.name, false, opts.groebner);
        if (ci.m() != 1) throw InputError("verify remark needs a single-hypersurface ci");
        return out.emit_verify(verify_remark(ci.hypersurfaces.front(), k, opts));
    }
    if (v_conjecture->parsed()) {
        out.command = "verify-conjecture";
        return out.emit_verify(verify_conjecture(resolve_ci(job, a.name, false, opts.groebner), opts));
    }
    throw InputError("no subcommand selected");
}

} // namespace
} // namespace csmforge

int main(int argc, char** argv) {
    try {
        return csmforge::run(argc, argv);
    } catch (const csmforge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return csmforge::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
