// czx - exact arithmetic for the extended bicyclic semigroup and its extensions
//
// Text forms:
//
//   elements  "(a,b)"  "e1"  "g:<value>" (value a multiple of k)  "z:<n>"
//   models    "cz" "s1" "s2:k=<k>,n=<n>" "s3" "s4" "s5:k=<k>,n=<n>"
//             S1 and S4 accept ":seq=<m1>|<m2>|...,step=<s>" for a
//             non-default isolated sequence
//   windows   "<lo>:<hi>"
//   pairs     "((a,b),(c,d));((e,f),(g,h))"

#ifndef CZX_TEXT_HPP_
#define CZX_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "czx/congruence.hpp"
#include "czx/model.hpp"
#include "czx/nbhd.hpp"

namespace czx {

  std::string to_string(Cz x);
  std::string to_string(ModelSpec const& m, ExtElement const& x);
  std::string to_string(ModelSpec const& m);
  std::string to_string(Window const& w);
  std::string to_string(CongruenceSpec const& spec);
  std::string to_string(BasicNbhd const& nb);
  std::string to_string(Status s);

  Cz         parse_cz(std::string_view text);
  ExtElement parse_element(std::string_view text, ModelSpec const& m);
  ModelSpec  parse_model(std::string_view text);
  Window     parse_window(std::string_view text);
  std::vector<CzPair>       parse_pairs(std::string_view text);
  std::vector<std::int64_t> parse_int_list(std::string_view text);

  //! "identity" or "sigma k=<g> quotient=<Z | Z/gZ | trivial>".
  std::string describe_congruence(CongruenceSpec const& spec);

}  // namespace czx

#endif  // CZX_TEXT_HPP_
