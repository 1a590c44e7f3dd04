#include "paac/chain_io.hpp"

#include <algorithm>
#include <fstream>

#include "paac/errors.hpp"

namespace paac {

SymbolChain read_chain_file(const std::string& path, std::uint32_t alphabet) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    SymbolChain chain;
    std::uint64_t v;
    Symbol max_seen = 0;
    while (in >> v) {
        if (v > 0xFFFF)
            throw IoError("symbol " + std::to_string(v) + " too large");
        chain.symbols.push_back(static_cast<Symbol>(v));
        max_seen = std::max(max_seen, static_cast<Symbol>(v));
    }
    if (!in.eof()) throw IoError("malformed chain file " + path);

    chain.alphabet_size = alphabet ? alphabet : max_seen + 1;
    validate_chain(chain);
    return chain;
}

void write_chain_file(const SymbolChain& chain, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    for (Symbol s : chain.symbols) out << s << '\n';
    if (!out) throw IoError("failed writing " + path);
}

} // namespace paac
