#include "ppg/cli.hpp"

#include "ppg/embed.hpp"
#include "ppg/eval.hpp"
#include "ppg/presentation.hpp"
#include "ppg/rewrite.hpp"
#include "ppg/semiconj.hpp"

#include <CLI11.hpp>

#include <map>
#include <optional>
#include <sstream>

namespace ppg::cli {

GroupWord parse_word(std::string_view text)
{
    GroupWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '*' || text[i] == '.') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '*' && text[j] != '.')
            ++j;
        try {
            w *= GroupWord::parse(text.substr(i, j - i));
        } catch (const Error& e) {
            throw Error("at position " + std::to_string(i + 1) + ": " + e.what());
        }
        i = j;
    }
    return w;
}

namespace {

struct Flags {
    bool trace = false;
    std::optional<std::size_t> bound;
    std::optional<std::size_t> max_len;
    std::string format = "text";
    bool machine() const { return format == "machine"; }
};

// One output record: `k=v k=v` in machine format, `k: v` lines or a single value in text.
class Out {
public:
    Out(std::ostream& os, const Flags& f) : os_(os), f_(f) {}

    void record(const std::vector<std::pair<std::string, std::string>>& kv)
    {
        if (f_.machine()) {
            for (std::size_t i = 0; i < kv.size(); ++i)
                os_ << (i ? " " : "") << kv[i].first << '=' << escape(kv[i].second);
            os_ << '\n';
            return;
        }
        if (kv.size() == 1) {
            os_ << kv[0].second << '\n';
            return;
        }
        for (const auto& [k, v] : kv)
            os_ << k << ": " << v << '\n';
    }

    // A table row: tab-separated values in text format.
    void row(const std::vector<std::pair<std::string, std::string>>& kv)
    {
        if (f_.machine())
            return record(kv);
        for (std::size_t i = 0; i < kv.size(); ++i)
            os_ << (i ? "\t" : "") << kv[i].second;
        os_ << '\n';
    }

    void trace(const Trace& t)
    {
        for (std::size_t i = 0; i < t.size(); ++i)
            if (f_.machine())
                record({{"step", std::to_string(i + 1)}, {"move", t[i].move}, {"form", t[i].form}});
            else
                os_ << i + 1 << ". " << t[i].move << "  =>  " << t[i].form << '\n';
    }

private:
    static std::string escape(const std::string& v)
    {
        if (v.find_first_of(" \"") == std::string::npos)
            return v;
        std::string out = "\"";
        for (char c : v)
            out += c == '"' ? std::string("\\\"") : std::string(1, c);
        return out + "\"";
    }
    std::ostream& os_;
    const Flags& f_;
};

std::string show(const GroupWord& w) { return w.empty() ? "1" : w.str(); }

std::pair<FinSeq, FinSeq> parse_pair(const std::string& text)
{
    std::string t = text;
    if (!t.empty() && t.front() == '(' && t.back() == ')')
        t = t.substr(1, t.size() - 2);
    auto comma = t.find(',');
    if (comma == std::string::npos)
        throw Error("expected a pair s,t: " + text);
    return {FinSeq::parse(t.substr(0, comma)), FinSeq::parse(t.substr(comma + 1))};
}

int report_verification(Out& out, const VerificationReport& rep, std::size_t n)
{
    for (const auto& r : rep.rows)
        out.row({{"family", r.family},
                 {"pipeline", r.pipeline ? "pass" : "fail"},
                 {"oracle", r.oracle ? "pass" : "fail"},
                 {"relator", r.relator}});
    out.record({{"relators", std::to_string(n)},
                {"failures", std::to_string(rep.failures)},
                {"disagreements", std::to_string(rep.disagreements)}});
    return rep.ok() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& os, std::ostream& err)
{
    CLI::App app{"ppgtool: words in a group of piecewise projective circle homeomorphisms. "
                 "All actions are right actions: a word acts letter by letter from left to right."};
    app.require_subcommand(1);
    Flags f;
    app.add_flag("--trace", f.trace, "print the rewriting moves");
    app.add_option("--bound", f.bound, "scale of point samples (description size or prefix length)");
    app.add_option("--max-len", f.max_len, "maximal subscript length");
    app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "machine"}));
    app.fallthrough();

    std::string a1, a2;
    auto verb = [&](const char* name, const char* help, std::vector<std::pair<std::string*, const char*>> pos) {
        CLI::App* s = app.add_subcommand(name, help);
        for (auto& [target, what] : pos)
            s->add_option(what, *target, what)->required();
        return s;
    };
    verb("eval", "image of a point", {{&a1, "word"}, {&a2, "point"}});
    verb("act", "image of a finite sequence under a T word", {{&a1, "word"}, {&a2, "seq"}});
    verb("std", "standard form of a word", {{&a1, "word"}});
    verb("balance", "balanced standard form of a word", {{&a1, "word"}});
    verb("trivial", "decide whether a word is the identity", {{&a1, "word"}});
    verb("eq", "decide whether two words are equal", {{&a1, "word1"}, {&a2, "word2"}});
    verb("phi", "continued-fraction coordinate of a point", {{&a1, "point"}});
    verb("Phi", "circle coordinate of a point", {{&a1, "point"}});
    verb("check-semiconj", "compare a word with a circle map on rational points", {{&a1, "word"}, {&a2, "map"}});
    verb("verify-r1", "check the finite relation list", {});
    verb("verify-r", "check bounded instances of the relation families", {});
    CLI::App* orbit = app.add_subcommand("orbit", "orbit of an independent pair under T");
    orbit->add_option("pair", a1, "s,t (omit to list every class)");
    verb("ast", "the element A_{s,t}", {{&a1, "s"}, {&a2, "t"}});
    verb("translate", "spell a word over x, x_1, p0, w_{10,110}, w_{10,1110}", {{&a1, "word"}});
    verb("g0-to-s", "spell a commutator-subgroup standard form with w-generators", {{&a1, "g-form"}});
    verb("embed-g0", "image of a standard form under the embedding at 10", {{&a1, "g-form"}});
    verb("bb12", "the generators x_10, y_100, y_101", {});
    verb("witness", "a point moved by a word", {{&a1, "word"}});

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp&) {
        os << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    Out out(os, f);
    try {
        if (name == "eval") {
            out.record({{"point", eval(parse_word(a1), EpSeq::parse(a2)).str()}});
        } else if (name == "act") {
            auto r = act_finite(parse_word(a1), FinSeq::parse(a2));
            out.record({{"image", r ? r->str() : "undefined"}});
        } else if (name == "std") {
            Trace t;
            SStandardForm form = to_standard_form(parse_word(a1), f.trace ? &t : nullptr);
            out.trace(t);
            SMetrics m = metrics(form);
            out.record({{"form", form.str()},
                        {"depth", m.depth ? std::to_string(*m.depth) : "none"},
                        {"length", std::to_string(m.length)},
                        {"unevenness", std::to_string(m.unevenness)}});
        } else if (name == "balance") {
            Trace t;
            SStandardForm form = to_standard_form(parse_word(a1), f.trace ? &t : nullptr);
            BalanceResult b = balance(form, f.trace ? &t : nullptr);
            out.trace(t);
            out.record({{"form", b.form.str()},
                        {"unevenness", std::to_string(metrics(b.form).unevenness)},
                        {"blocked", b.blocked ? "yes" : "no"}});
            if (b.blocked)
                out.record({{"report", b.report}});
        } else if (name == "trivial") {
            TrivialityResult r = is_trivial(parse_word(a1), f.trace);
            out.trace(r.trace);
            if (r.trivial) {
                out.record({{"verdict", "trivial"}});
                return 0;
            }
            std::vector<std::pair<std::string, std::string>> kv{{"verdict", "nontrivial"}};
            if (r.witness)
                kv.emplace_back("witness", r.witness->str());
            if (r.parity_blocked)
                kv.emplace_back("parity_blocked", "yes");
            out.record(kv);
            return 1;
        } else if (name == "eq") {
            bool eq = words_equal(parse_word(a1), parse_word(a2));
            out.record({{"verdict", eq ? "equal" : "different"}});
            return eq ? 0 : 1;
        } else if (name == "phi" || name == "Phi") {
            EpSeq xi = EpSeq::parse(a1);
            out.record({{"value", (name == "phi" ? phi(xi) : Phi(xi)).str()}});
        } else if (name == "check-semiconj") {
            SemiconjReport r = check_semiconjugacy(parse_word(a1), parse_map_word(a2), rational_points(f.bound.value_or(8)));
            for (const auto& e : r.entries)
                if (!e.pass)
                    out.row({{"point", e.xi.str()}, {"circle", e.circle_side.str()}, {"cantor", e.cantor_side.str()}});
            out.record({{"points", std::to_string(r.entries.size())}, {"failures", std::to_string(r.failures())}});
            return r.all_pass() ? 0 : 1;
        } else if (name == "verify-r1") {
            auto rs = r1_relators();
            return report_verification(out, verify_relators(rs, f.bound.value_or(6)), rs.size());
        } else if (name == "verify-r") {
            auto rs = instantiate_R(f.max_len.value_or(3));
            return report_verification(out, verify_relators(rs, f.bound.value_or(6)), rs.size());
        } else if (name == "orbit") {
            std::size_t len = f.max_len.value_or(4);
            if (a1.empty()) {
                for (const auto& c : pair_orbits(len))
                    out.row({{"representative", "(" + c.representative.first.str() + "," + c.representative.second.str() + ")"},
                             {"type", to_string(c.type)},
                             {"size", std::to_string(c.size)}});
                return 0;
            }
            auto p = parse_pair(a1);
            auto members = orbit_of(p, len);
            out.record({{"type", to_string(pair_type(p.first, p.second))}, {"size", std::to_string(members.size())}});
            for (const auto& [s, t] : members)
                out.row({{"member", "(" + s.str() + "," + t.str() + ")"}});
        } else if (name == "ast") {
            const ASt& a = a_st(FinSeq::parse(a1), FinSeq::parse(a2));
            out.record({{"element", a.a.str()}, {"word", show(word_of(a.a))}, {"base", a.base.str()}});
        } else if (name == "translate") {
            out.record({{"word", show(translate_to_X1(parse_word(a1)))}});
        } else if (name == "g0-to-s") {
            out.record({{"word", show(g0prime_to_sword(GStandardForm::parse(a1)))}});
        } else if (name == "embed-g0") {
            GStandardForm g = GStandardForm::parse(a1);
            out.record({{"image", show(phi_g0_to_s(g))}, {"sword", show(phi_g0_to_sword(g))}});
        } else if (name == "bb12") {
            auto [x, a, b] = bb12_generators();
            bool commute = !find_moved_point(commutator(a, b), f.bound.value_or(8)) && bb12_projective_commute();
            out.record({{"generators", x.str() + ", " + a.str() + ", " + b.str()},
                        {"commute", commute ? "yes" : "no"}});
            return commute ? 0 : 1;
        } else if (name == "witness") {
            auto p = find_moved_point(parse_word(a1), f.bound.value_or(10));
            out.record({{"witness", p ? p->str() : "none"}});
            return p ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace ppg::cli
