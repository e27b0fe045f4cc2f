package data.store;

public class Keeper {
    public void keep() {
    }
}
