//! Runs the code listings in `book/src` as doctests, one module per chapter.

macro_rules! chapter {
    ($name:ident, $file:literal) => {
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        pub mod $name {}
    };
}

chapter!(introduction, "introduction.md");
chapter!(polynomials, "polynomials.md");
chapter!(shapes, "shapes.md");
chapter!(ice, "ice.md");
chapter!(star_triangle, "star-triangle.md");
chapter!(factorial_schur, "factorial-schur.md");
chapter!(cli, "cli.md");
