#ifndef GMUNN_IO_HPP_
#define GMUNN_IO_HPP_

#include <iosfwd>
#include <string>

#include "gmunn/actions.hpp"
#include "gmunn/core.hpp"
#include "gmunn/presheaf.hpp"
#include "gmunn/topology.hpp"

// Text formats. All parsers are strict: every line must consume exactly its
// expected tokens, ids are range-checked, and trailing content is rejected.
// Parsed structures run through the module validators, so a well-formed
// file with bad algebra still fails with the algebraic witness.
namespace gmunn::io {

enum class FileKind { isg, psh, act, top, bun };

/// Dispatch on the first header line of the text.
FileKind sniff(const std::string& text);

InverseSemigroup read_isg(std::istream& in);
void write_isg(std::ostream& out, const InverseSemigroup& s);

Presheaf read_psh(std::istream& in);
void write_psh(std::ostream& out, const Presheaf& p);

SupportedAction read_act(std::istream& in);
void write_act(std::ostream& out, const SupportedAction& a);

FiniteSpace read_top(std::istream& in);
void write_top(std::ostream& out, const FiniteSpace& x);

EtaleBundle read_bun(std::istream& in);
void write_bun(std::ostream& out, const EtaleBundle& b);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit digest, lowercase hex.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace gmunn::io

#endif  // GMUNN_IO_HPP_
