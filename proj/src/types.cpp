#include "dlz/types.hpp"

namespace dlz {

std::string to_string(FunctionTag tag) {
    switch (tag) {
        case FunctionTag::L: return "L";
        case FunctionTag::Lprime: return "Lprime";
        case FunctionTag::G1: return "G1";
        case FunctionTag::FlogF: return "FlogF";
    }
    return "?";
}

FunctionTag function_tag_from_string(const std::string& s) {
    if (s == "L") return FunctionTag::L;
    if (s == "Lprime") return FunctionTag::Lprime;
    if (s == "G1") return FunctionTag::G1;
    if (s == "FlogF") return FunctionTag::FlogF;
    throw DomainError("unknown function tag: " + s);
}

}  // namespace dlz
