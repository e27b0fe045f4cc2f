package c4;

public class Profile {
    public String name;

    public void clear() {
    }

    public String city;
}
