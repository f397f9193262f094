#pragma once

// Incremental construction of S standard forms: appending w-factors and
// rearranging T letters into the head, raising depth where needed.

#include "ensure.hpp"
#include "ppg/sform.hpp"

namespace ppg::detail {

struct SUnit {
    WFactor f;

    std::vector<FinSeq> subs() const { return {f.s, f.t}; }
    static std::pair<TElem, std::vector<SUnit>> amplify(const SUnit& u, std::size_t side)
    {
        const FinSeq& s = u.f.s;
        const FinSeq& t = u.f.t;
        std::vector<SUnit> kids;
        TElem x;
        if (side == 0) {
            x = TElem::x(s);
            kids = {{{s + '0', s + FinSeq("10"), 1}}, {{s + FinSeq("11"), t, 1}}};
        } else {
            x = TElem::x(t).inverse();
            kids = {{{s, t + '1', 1}}, {{t + FinSeq("01"), t + FinSeq("00"), 1}}};
        }
        if (u.f.power > 1)
            kids.push_back({{s, t, u.f.power - 1}});
        return {x, kids};
    }
    SUnit mapped(const TElem& g) const { return {{*g.act(f.s), *g.act(f.t), f.power}}; }
};

bool independent_all(std::initializer_list<FinSeq> seqs);
// Merges adjacent equal factors and cancels adjacent inverse pairs.
std::vector<WFactor> normalize(std::vector<WFactor> fs);

class SBuilder {
public:
    explicit SBuilder(TElem head = TElem(), Trace* trace = nullptr) : head_(std::move(head)), trace_(trace) {}
    explicit SBuilder(const SStandardForm& form, Trace* trace = nullptr);

    // Right-multiply by a T element and move it into the head.
    void apply(const TElem& h, const std::string& label);
    // Right-multiply by w_{s,t}^power.
    void append(const WFactor& f);
    // Rewrites the current form as g·L' with every subscript of L' satisfying pred.
    void ensure_all(const SeqPred& pred, const std::string& label);

    SStandardForm form() const;
    const TElem& head() const { return head_; }
    std::size_t size() const { return list_.size(); }

private:
    void record(const std::string& label);
    TElem head_;
    std::vector<SUnit> list_;
    EnsureBudget budget_;
    Trace* trace_;
};

} // namespace ppg::detail
