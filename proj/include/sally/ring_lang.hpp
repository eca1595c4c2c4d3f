#ifndef SALLY_RING_LANG_HPP
#define SALLY_RING_LANG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sally/examples.hpp"

namespace sally {

/// Line-oriented description of a ring and its ideals:
///
///   # comment
///   char 32003
///   vars x y z
///   order grevlex            (or lex; optional)
///   mod x*y - z^2, ...       (defining ideal; optional, may repeat)
///   ideal I = x^2, x*y, y^2
///   expect e0 = 4
///
/// Polynomials use + - * ^, integer literals and declared variables; '*'
/// may be omitted between factors and there are no parentheses.
struct SourceFile {
    RingSpecPtr ring;
    std::vector<std::pair<std::string, IdealHandle>> ideals;  // in file order
    std::map<std::string, std::int64_t> expected;

    const IdealHandle* find(const std::string& name) const;
};

/// Throws ParseError carrying line and column.
SourceFile parse_source(std::string_view text, Backend backend = Backend::openmp);

/// Instance from the ideals named I and Q (and h, when present).
/// Throws ParseError when I or Q is missing.
NamedInstance to_instance(const SourceFile& source, std::string name);

std::string serialize(const NamedInstance& instance);

}  // namespace sally

#endif  // SALLY_RING_LANG_HPP
