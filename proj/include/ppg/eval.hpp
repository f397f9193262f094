#pragma once

#include "ppg/binseq.hpp"
#include "ppg/word.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace ppg {

// A word compiled into a chain of sequential transducers, one per unit letter.
class CompiledWord {
public:
    explicit CompiledWord(const GroupWord& w);
    EpSeq operator()(const EpSeq& xi) const;

private:
    struct Stage {
        bool is_tree = false;
        std::shared_ptr<const std::unordered_map<std::string, std::string>> leaves; // tree stage
        std::string sub;  // y stage subscript
        bool inv = false; // y stage runs y⁻¹
    };
    std::vector<Stage> stages_;
};

EpSeq eval(const GroupWord& w, const EpSeq& xi);

} // namespace ppg
