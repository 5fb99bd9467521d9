#pragma once

#include <qciore/structures.hpp>

#include <string>
#include <string_view>

namespace qciore
{

/// Structure files are line-oriented; `#` starts a comment.
///
///   domain = {a, b, c}
///   pred P/1 { plus={(a)} minus={} dot={(b),(c)} }
///   pred =/2 { plus={(a,a)} minus={...} dot={...} }
///   fun f/1 {(a)->b, (b)->c, (c)->a}
///   const c0 = a
///   equality normal
///
/// Every tuple of a predicate must sit in exactly one class; an omitted class
/// is empty. `equality normal` adds equality to the signature: without an
/// explicit `pred =/2` it is interpreted classically, otherwise the given
/// triple must have the diagonal as the union of its plus and dot classes.
/// The signature is read off the declarations.
PartialStructure parse_structure( std::string_view text );
PartialStructure load_structure( std::string const& path );

/// Prints in the file format above; parse_structure reads it back unchanged.
std::string print_structure( PartialStructure const& A );

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file( std::string const& path );

} // namespace qciore
