#include "ppg/eval.hpp"


namespace ppg {

namespace {

enum Mode : char { MATCH = 'm', COPY = 'c', Y = 'Y', Y0 = 'y', I = 'I', I1 = 'i' };

struct Run {
    Mode mode = MATCH;
    std::string buf;
};

// Bit-level rules of y (states Y, Y0) and y⁻¹ (states I, I1).
void step_y(Run& r, char b, std::string& out)
{
    switch (r.mode) {
    case Y:
        if (b == '1')
            out += "11";
        else
            r.mode = Y0;
        break;
    case Y0:
        if (b == '0') {
            out += '0';
            r.mode = Y;
        } else {
            out += "10";
            r.mode = I;
        }
        break;
    case I:
        if (b == '0')
            out += "00";
        else
            r.mode = I1;
        break;
    case I1:
        if (b == '0') {
            out += "01";
            r.mode = Y;
        } else {
            out += '1';
            r.mode = I;
        }
        break;
    default: break;
    }
}

} // namespace

CompiledWord::CompiledWord(const GroupWord& w)
{
    auto tree_stage = [&](const TElem& f) {
        auto m = std::make_shared<std::unordered_map<std::string, std::string>>();
        for (const auto& [d, r] : f.pairs())
            (*m)[d.bits()] = r.bits();
        Stage s;
        s.is_tree = true;
        s.leaves = std::move(m);
        stages_.push_back(std::move(s));
    };
    auto y_stage = [&](const FinSeq& sub, bool inv) {
        Stage s;
        s.sub = sub.bits();
        s.inv = inv;
        stages_.push_back(std::move(s));
    };
    for (const auto& l : w.letters) {
        long long k = l.e < 0 ? -l.e : l.e;
        switch (l.gen) {
        case Gen::X:
        case Gen::P: {
            TElem unit = letter_elem(Letter{l.gen, l.s, l.t, l.n, l.e > 0 ? 1 : -1});
            for (long long i = 0; i < k; ++i)
                tree_stage(unit);
            break;
        }
        case Gen::Y:
            for (long long i = 0; i < k; ++i)
                y_stage(l.s, l.e < 0);
            break;
        case Gen::W:
            for (long long i = 0; i < k; ++i) {
                y_stage(l.e > 0 ? l.s : l.t, false);
                y_stage(l.e > 0 ? l.t : l.s, true);
            }
            break;
        }
    }
}

EpSeq CompiledWord::operator()(const EpSeq& xi) const
{
    if (stages_.empty())
        return xi;
    std::vector<Run> runs(stages_.size());
    for (std::size_t i = 0; i < stages_.size(); ++i)
        if (!stages_[i].is_tree && stages_[i].sub.empty())
            runs[i].mode = stages_[i].inv ? I : Y;

    std::string out;
    std::string cur, next;
    auto feed = [&](char bit) {
        cur.assign(1, bit);
        for (std::size_t i = 0; i < stages_.size() && !cur.empty(); ++i) {
            const Stage& st = stages_[i];
            Run& r = runs[i];
            next.clear();
            for (char b : cur) {
                if (r.mode == COPY) {
                    next += b;
                } else if (st.is_tree) {
                    r.buf += b;
                    auto it = st.leaves->find(r.buf);
                    if (it != st.leaves->end()) {
                        next += it->second;
                        r.buf.clear();
                        r.mode = COPY;
                    }
                } else if (r.mode == MATCH) {
                    if (b == st.sub[r.buf.size()]) {
                        r.buf += b;
                        if (r.buf.size() == st.sub.size()) {
                            next += r.buf;
                            r.buf.clear();
                            r.mode = st.inv ? I : Y;
                        }
                    } else {
                        next += r.buf;
                        next += b;
                        r.buf.clear();
                        r.mode = COPY;
                    }
                } else {
                    step_y(r, b, next);
                }
            }
            std::swap(cur, next);
        }
        out += cur;
    };

    for (char b : xi.prefix().bits())
        feed(b);
    const std::string& per = xi.period().bits();
    std::unordered_map<std::string, std::size_t> seen;
    std::string key;
    for (std::size_t iter = 0;; ++iter) {
        std::size_t phase = iter % per.size();
        if (phase == 0) {
            key.clear();
            for (const auto& r : runs) {
                key += static_cast<char>(r.mode);
                key += r.buf;
                key += '|';
            }
            auto [it, fresh] = seen.emplace(key, out.size());
            if (!fresh) {
                std::size_t l1 = it->second;
                if (l1 == out.size())
                    throw Error("evaluation produced no output over a full cycle");
                return EpSeq(FinSeq(out.substr(0, l1)), FinSeq(out.substr(l1)));
            }
        }
        feed(per[phase]);
    }
}

EpSeq eval(const GroupWord& w, const EpSeq& xi) { return CompiledWord(w)(xi); }

} // namespace ppg
