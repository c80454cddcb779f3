#pragma once

#include <map>
#include <string>

#include "epdl/model.hpp"

namespace epdl {

/// The worked-example models, keyed "spy", "context", "example1".."example4".
///
///   spy      s1..s8; r: s1-s2-s3-s4-s5, u: s2-s6, s3-s7, s4-s8;
///            Safe at s4,s7,s8; U = {s2,s3}
///   context  s1 -b-> s3, s1 -a-> s2 -a-> s3 -a-> s4; p at s3; U = {s1,s2}
///   example1 s1 -a-> s2, s1 -a-> s3, s2 -b-> s4; p at s4; U = {s1}
///   example2 s1 -a-> s3 -b-> s5, s2 -b-> s4 -a-> s6; p at s5,s6; U = {s1,s2}
///   example3 s1 -a-> s2, s2 -b-> s5, s2 -b-> s4; p at s5; U = {s1}
///   example4 s1 -a-> s3, s1 -b-> s4, s2 -a-> s4, s2 -b-> s5;
///            p at s3,s4,s5, q at s4,s5; U = {s1,s2}
std::map<std::string, UncertaintyMap> fixtures();

UncertaintyMap fixture(const std::string& name);

}  // namespace epdl
