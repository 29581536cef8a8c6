pub mod error;
pub mod special;
pub mod sum;
pub mod series;
pub mod triangle;
pub mod quadrature;
pub mod record;
pub mod identities;
pub mod errata;
pub mod verify;
pub mod cli;

#[cfg(test)]
extern crate self as ramseries;


#[cfg(doctest)]
mod book_doctests {
    macro_rules! snippets {
        ($($name:ident),* $(,)?) => {$(
            #[doc = concat!("```\n", include_str!(concat!("../../../book/snippets/", stringify!($name), ".rs")), "```")]
            pub mod $name {}
        )*};
    }

    snippets!(intro, special, series, triangle, identities, integrals, cli, errata);
}
