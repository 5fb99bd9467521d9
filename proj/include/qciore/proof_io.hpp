#pragma once

#include <qciore/hilbert.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qciore
{

class ProofFormatError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Proof files hold one or more proofs; `#` starts a comment.
///
///   name: generalization
///   sig: P/2            (optional, declares symbols up front)
///   hyp: P(x,y)
///   1. P(x,y) ; hyp 1
///   2. ... ; ax Ax1
///   3. ... ; mp 1 2
///
/// Justifications: `ax [ID]`, `mp i j`, `forall-in i`, `exists-in i`,
/// `hyp k`, `lemma NAME [i ...]`. Formulas may use propositional letters as
/// schematic variables; other symbols are inferred from their use unless a
/// `sig:` line declares them. Steps must be numbered 1, 2, ... in order.
std::vector<Proof> parse_proofs( std::string_view text );
std::vector<Proof> load_proofs( std::string const& path );

/// Prints in the file format above.
std::string print_proof( Proof const& p );

} // namespace qciore
