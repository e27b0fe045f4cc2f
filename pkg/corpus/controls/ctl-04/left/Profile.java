package c4;

public class Profile {
    public String name;

    public int age;

    public void clear() {
    }
}
