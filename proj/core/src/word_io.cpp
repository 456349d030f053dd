#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

#include "hkannuli/freegroup.hpp"

namespace hka {

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
    throw std::invalid_argument("word parse error at offset " + std::to_string(pos) + " in \"" +
                                std::string(text) + "\": " + what);
}

}  // namespace

Word parse_word(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i < text.size() && text[i] == '1') {
        std::size_t j = i + 1;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j == text.size()) return {};
    }
    std::vector<Block> raw;
    while (true) {
        skip();
        if (i == text.size()) break;
        char c = text[i];
        Gen g;
        std::int64_t sign;
        switch (c) {
            case 'u': g = Gen::U; sign = 1; break;
            case 'U': g = Gen::U; sign = -1; break;
            case 'v': g = Gen::V; sign = 1; break;
            case 'V': g = Gen::V; sign = -1; break;
            default: fail(text, i, std::string("unexpected symbol '") + c + "'");
        }
        ++i;
        std::int64_t e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip();
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            std::string_view num = text.substr(start, i - start);
            if (!num.empty() && num[0] == '+') num.remove_prefix(1);
            if (num.empty() || num == "-") fail(text, start, "missing exponent");
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), e);
            if (ec == std::errc::result_out_of_range) fail(text, start, "exponent out of supported range");
            if (ec != std::errc() || ptr != num.data() + num.size()) fail(text, start, "bad exponent");
        }
        raw.push_back({g, detail::mul(sign, e)});
    }
    return Word::reduce(raw);
}

std::string to_string(const Word& w) {
    if (w.is_identity()) return "1";
    std::string out;
    for (const Block& b : w.blocks()) {
        if (!out.empty()) out += ' ';
        out += b.gen == Gen::U ? 'u' : 'v';
        if (b.exp != 1) {
            out += '^';
            out += std::to_string(b.exp);
        }
    }
    return out;
}

}  // namespace hka
