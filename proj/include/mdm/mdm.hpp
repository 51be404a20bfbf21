#ifndef MDM_MDM_HPP_INCLUDED
#define MDM_MDM_HPP_INCLUDED

#include <mdm/conformance.hpp>
#include <mdm/error.hpp>
#include <mdm/graph.hpp>
#include <mdm/interchange.hpp>
#include <mdm/maintenance.hpp>
#include <mdm/store.hpp>
#include <mdm/term.hpp>
#include <mdm/vocabulary.hpp>

#endif // MDM_MDM_HPP_INCLUDED
