#ifndef IMMACULATA_IMMACULATA_HPP
#define IMMACULATA_IMMACULATA_HPP

#include <immaculata/compositions.hpp>
#include <immaculata/error.hpp>
#include <immaculata/integer.hpp>
#include <immaculata/linear_combination.hpp>
#include <immaculata/nsym.hpp>
#include <immaculata/qsym.hpp>
#include <immaculata/serialize.hpp>
#include <immaculata/sym.hpp>
#include <immaculata/tableaux.hpp>
#include <immaculata/verify.hpp>

#endif
