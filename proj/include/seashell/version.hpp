#ifndef SEASHELL_VERSION_HPP
#define SEASHELL_VERSION_HPP

#define SEASHELL_VERSION "0.1.0"

#endif
