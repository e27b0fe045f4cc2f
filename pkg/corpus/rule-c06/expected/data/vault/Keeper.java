package data.vault;

public class Keeper {
    public void keep() {
    }
}
