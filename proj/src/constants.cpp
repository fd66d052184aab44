#include "cotsum/constants.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

namespace cotsum::constants {

namespace {

struct Entry {
    const char* name;
    const char* digits;  // 40 significant decimal digits
};

// scripts/gen_constants.py regenerates this table; each value is
// cross-checked there against an independent computation before printing.
constexpr std::array<Entry, 5> kTable = {{
    {"gamma", "0.5772156649015328606065120900824024310422"},
    {"log_two_pi", "1.837877066409345483560659472811235279723"},
    {"zeta2", "1.644934066848226436472415166646025189219"},
    {"zeta3", "1.202056903159594285399738161511449990765"},
    {"zeta4", "1.082323233711138191516003696541167902775"},
}};

const Entry& find(std::string_view name) {
    for (const auto& e : kTable)
        if (name == e.name) return e;
    throw std::invalid_argument("unknown constant: " + std::string(name));
}

}  // namespace

double get(std::string_view name) {
    return std::strtod(find(name).digits, nullptr);
}

const std::string& digits(std::string_view name) {
    static const std::array<std::string, kTable.size()> cache = [] {
        std::array<std::string, kTable.size()> c;
        for (std::size_t i = 0; i < kTable.size(); ++i) c[i] = kTable[i].digits;
        return c;
    }();
    for (std::size_t i = 0; i < kTable.size(); ++i)
        if (name == kTable[i].name) return cache[i];
    throw std::invalid_argument("unknown constant: " + std::string(name));
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& e : kTable) out.emplace_back(e.name);
    return out;
}

}  // namespace cotsum::constants
