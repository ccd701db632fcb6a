#ifndef QGDEF_GERM_FORMAT_HPP
#define QGDEF_GERM_FORMAT_HPP

#include <map>
#include <string>

#include <qgdef/germ.hpp>

namespace qgdef {

/**
 * Line-oriented germ file grammar:
 *
 *   germ "<name>"
 *   assume h2_tangent_vanishes = true|false
 *   assume modification = true|false
 *   component <id> genus=<int> (selfint=<rational> | graph=<gid>:<id>+<id>+...)
 *   graph <gid> {
 *     curve <id> self=<int> [genus=<int>] [retained]
 *     edge <id> <id> [x<multiplicity>]
 *   }
 *   point <id> type=<nc|pinch|slt|cusp1|cusp2|cusp3|cusp4>
 *         [n=<int> a=<int> p=<int|inf> q=<int|inf> r=<int|inf>]
 *         on=<cid>[:main|:other][,<cid>[:main|:other]] [branches=2]
 *
 * '#' starts a comment. Unknown keys are errors. Parse errors carry line
 * numbers; semantic errors are deferred to validate().
 */
GermDescription parse_germ_file(const std::string& text);

/// Canonical emission: parse-emit-parse is the identity on the normalized
/// form (sorted components, graphs, curves, edges and points).
std::string emit_germ_file(const GermDescription& g);

/// The bundled fixture corpus, file name -> contents.
const std::map<std::string, std::string>& bundled_corpus();

} // namespace qgdef

#endif
