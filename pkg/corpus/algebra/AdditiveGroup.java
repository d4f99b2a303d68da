package algebra;

interface AdditiveGroup <T>
    extends AdditiveMonoid <T> {

    T getAddInv(); // the additive inverse element

}
